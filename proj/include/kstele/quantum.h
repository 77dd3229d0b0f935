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

#ifndef KSTELE_QUANTUM_H
#define KSTELE_QUANTUM_H

#include <array>
#include <optional>
#include <span>
#include <utility>

#include "kstele/exact_prob.h"
#include "kstele/ks_set.h"
#include "kstele/random.h"

namespace kstele {

/// |<u|v>|^2 for the normalized rays: (u.v)^2 / (|u|^2 |v|^2), exactly.
ExactProb overlap_prob(const IntVec4 &u, const IntVec4 &v);

/// True iff sum_i u_i u_i^T / |u_i|^2 equals the 4x4 identity exactly, i.e.
/// the four rays resolve the identity and the maximally entangled state keeps
/// its form when re-expanded in this basis.
bool completeness_check(const Basis &b);

/// Joint outcome law when Alice measures her half of
/// (1/2) sum_i |u_i>|u_i> in one basis and Bob measures his half in another.
struct JointDistribution {
    int alice_basis;
    int bob_basis;
    /// probs[i][j]: Alice obtains slot i+1 and Bob obtains slot j+1.
    std::array<std::array<ExactProb, 4>, 4> probs;

    /// 1-based slots.
    const ExactProb &at(int alice_slot, int bob_slot) const {
        return probs.at(alice_slot - 1).at(bob_slot - 1);
    }
    Rational total() const;
    Rational alice_marginal(int alice_slot) const;
    Rational bob_marginal(int bob_slot) const;
};

/// Entry (i, j) is overlap_prob(alice_i, bob_j) / 4. Throws
/// std::invalid_argument if either basis fails `completeness_check`.
JointDistribution joint_distribution(const KsSet &set, int alice_basis, int bob_basis);

/// Draws an index with probability exactly probs[index], by inverse CDF over a
/// uniform integer below the lcm of the denominators. Throws
/// std::invalid_argument if the probabilities do not sum to 1 and
/// std::overflow_error if the common denominator does not fit in 63 bits.
size_t sample_index(std::span<const ExactProb> probs, RandomSource &rng);

/// Draws (alice_slot, bob_slot), 1-based, scanning the 16 cells row-major.
std::pair<int, int> sample_joint(const JointDistribution &d, RandomSource &rng);

/// One copy of the shared state for one round.
///
/// Each party measures its half at most once. Whoever measures first gets a
/// uniform outcome; the other outcome is then drawn from the conditional
/// law, so the pair always follows `joint_distribution` regardless of which
/// side goes first.
class EntangledPair {
   public:
    EntangledPair(const KsSet &set, RandomSource rng) : set_(&set), rng_(rng) {
    }

    /// Returns the 1-based slot of the outcome. Throws std::logic_error on a
    /// second measurement by the same party.
    int measure_alice(int basis);
    int measure_bob(int basis);

   private:
    struct Outcome {
        int basis;
        int slot;
    };
    int measure(std::optional<Outcome> &mine, const std::optional<Outcome> &theirs, int basis);

    const KsSet *set_;
    RandomSource rng_;
    std::optional<Outcome> alice_;
    std::optional<Outcome> bob_;
};

}  // namespace kstele

#endif
