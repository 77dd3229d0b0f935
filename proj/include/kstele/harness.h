// Copyright 2026 The kstele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KSTELE_HARNESS_H
#define KSTELE_HARNESS_H

#include <cstdint>
#include <string>
#include <vector>

#include "kstele/exact_prob.h"
#include "kstele/random.h"
#include "kstele/strategies.h"

namespace kstele {

/// Uniform over all (basis, slot) questions of a set with `num_bases` bases.
Question draw_question(RandomSource &rng, size_t num_bases = 9);

/// Alice's answer has exactly one 1, and it agrees with Bob's bit on the
/// common vector.
bool evaluate_win(const Question &q, const AliceAnswer &a, const BobAnswer &b);

struct RoundRecord {
    uint64_t index = 0;
    Question question{1, 1};
    AliceAnswer alice;
    BobAnswer bob;
    bool won = false;
    size_t bits_alice_to_bob = 0;
    size_t bits_bob_to_alice = 0;
    /// Non-empty when the round was forfeited (strategy threw, or a
    /// no-communication strategy used the channel).
    std::string error;

    bool operator==(const RoundRecord &other) const = default;
};

struct TranscriptSummary {
    uint64_t rounds = 0;
    uint64_t wins = 0;
    ExactProb win_rate;
    /// Total bits in both directions divided by rounds.
    Rational mean_bits{0};

    bool operator==(const TranscriptSummary &other) const = default;
};

struct Transcript {
    uint64_t seed = 0;
    std::string strategy;
    std::vector<RoundRecord> rounds;
    TranscriptSummary summary;
};

TranscriptSummary summarize(const std::vector<RoundRecord> &rounds);

/// Plays round `index` of a run seeded with `seed`. The round draws all its
/// randomness from streams derived from (seed, index) alone.
RoundRecord play_round(const Strategy &strategy, uint64_t seed, uint64_t index);

/// Plays rounds 0..n-1. With threads > 1 (and a strategy that is not
/// serial) rounds are split across worker threads; the transcript is the same
/// either way. Throws std::invalid_argument if n == 0.
Transcript play_rounds(const Strategy &strategy, uint64_t n, uint64_t seed, unsigned threads = 1);

/// Exact win probability under the uniform question distribution. Throws
/// std::invalid_argument for strategies without an exact analysis.
ExactProb exact_win_probability(const Strategy &strategy);

/// Exact win probability for one question.
ExactProb exact_win_probability(const Strategy &strategy, const Question &q);

}  // namespace kstele

#endif
