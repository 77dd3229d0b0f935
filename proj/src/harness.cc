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

#include "kstele/harness.h"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace kstele {

Question draw_question(RandomSource &rng, size_t num_bases) {
    uint64_t k = rng.uniform_below(4 * num_bases);
    return Question{static_cast<int>(k / 4) + 1, static_cast<int>(k % 4) + 1};
}

bool evaluate_win(const Question &q, const AliceAnswer &a, const BobAnswer &b) {
    int ones = 0;
    for (uint8_t bit : a.bits) {
        ones += bit == 1;
    }
    return ones == 1 && a.bits.at(q.bob_slot - 1) == b.bit;
}

TranscriptSummary summarize(const std::vector<RoundRecord> &rounds) {
    TranscriptSummary s;
    s.rounds = rounds.size();
    int64_t bits = 0;
    for (const auto &r : rounds) {
        s.wins += r.won;
        bits += static_cast<int64_t>(r.bits_alice_to_bob + r.bits_bob_to_alice);
    }
    if (s.rounds > 0) {
        s.win_rate = ExactProb(static_cast<int64_t>(s.wins), static_cast<int64_t>(s.rounds));
        s.mean_bits = Rational(bits, static_cast<int64_t>(s.rounds));
    }
    return s;
}

RoundRecord play_round(const Strategy &strategy, uint64_t seed, uint64_t index) {
    const KsSet &set = strategy.set();
    uint64_t round_seed = derive_seed(seed, index);
    RandomSource referee(derive_seed(round_seed, 0));

    RoundRecord record;
    record.index = index;
    record.question = draw_question(referee, set.num_bases());
    RoundResources res(set, round_seed);
    Channel channel;
    try {
        record.alice = strategy.alice_answer(record.question.alice_set, res, channel);
        CanonicalVec bob_vector = canonicalize(set.vector_at(Occurrence{record.question.alice_set, record.question.bob_slot}));
        record.bob = strategy.bob_answer(bob_vector, res, channel);
        record.won = evaluate_win(record.question, record.alice, record.bob);
    } catch (const std::exception &ex) {
        record.won = false;
        record.error = ex.what();
    }
    record.bits_alice_to_bob = channel.bits_alice_to_bob();
    record.bits_bob_to_alice = channel.bits_bob_to_alice();
    if (!strategy.uses_communication() && channel.bits_sent() > 0 && record.error.empty()) {
        record.won = false;
        record.error = "no-communication strategy wrote to the channel";
    }
    return record;
}

Transcript play_rounds(const Strategy &strategy, uint64_t n, uint64_t seed, unsigned threads) {
    if (n == 0) {
        throw std::invalid_argument("Need at least one round.");
    }
    Transcript t;
    t.seed = seed;
    t.strategy = strategy.name();
    t.rounds.resize(n);

    if (strategy.serial()) {
        threads = 1;
    }
    threads = static_cast<unsigned>(std::clamp<uint64_t>(threads, 1, n));
    if (threads == 1) {
        for (uint64_t i = 0; i < n; i++) {
            t.rounds[i] = play_round(strategy, seed, i);
        }
    } else {
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < threads; w++) {
            workers.emplace_back([&, w] {
                for (uint64_t i = w; i < n; i += threads) {
                    t.rounds[i] = play_round(strategy, seed, i);
                }
            });
        }
    }
    t.summary = summarize(t.rounds);
    return t;
}

ExactProb exact_win_probability(const Strategy &strategy, const Question &q) {
    auto outcomes = strategy.answer_distribution(q);
    if (!outcomes.has_value()) {
        throw std::invalid_argument("Strategy '" + strategy.name() + "' has no exact analysis.");
    }
    Rational win(0);
    for (const auto &o : *outcomes) {
        bool silent_ok = strategy.uses_communication() || o.bits_alice_to_bob + o.bits_bob_to_alice == 0;
        if (silent_ok && evaluate_win(q, o.alice, o.bob)) {
            win += o.prob.value();
        }
    }
    return ExactProb(win);
}

ExactProb exact_win_probability(const Strategy &strategy) {
    const KsSet &set = strategy.set();
    Rational total(0);
    for (int k = 1; k <= static_cast<int>(set.num_bases()); k++) {
        for (int s = 1; s <= 4; s++) {
            total += exact_win_probability(strategy, Question{k, s}).value();
        }
    }
    return ExactProb(total / static_cast<int64_t>(4 * set.num_bases()));
}

}  // namespace kstele
