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

#include "kstele/quantum.h"

#include <numeric>
#include <stdexcept>
#include <string>

namespace kstele {

ExactProb overlap_prob(const IntVec4 &u, const IntVec4 &v) {
    int64_t d = dot(u, v);
    return ExactProb(d * d, static_cast<int64_t>(u.norm2()) * v.norm2());
}

bool completeness_check(const Basis &b) {
    std::array<std::array<Rational, 4>, 4> sum{};
    for (const auto &u : b.vectors) {
        Rational inv_norm(1, u.norm2());
        for (size_t r = 0; r < 4; r++) {
            for (size_t c = 0; c < 4; c++) {
                sum[r][c] += inv_norm * static_cast<int64_t>(u[r] * u[c]);
            }
        }
    }
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            if (sum[r][c] != Rational(r == c ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

Rational JointDistribution::total() const {
    Rational t(0);
    for (const auto &row : probs) {
        for (const auto &p : row) {
            t += p.value();
        }
    }
    return t;
}

Rational JointDistribution::alice_marginal(int alice_slot) const {
    Rational t(0);
    for (const auto &p : probs.at(alice_slot - 1)) {
        t += p.value();
    }
    return t;
}

Rational JointDistribution::bob_marginal(int bob_slot) const {
    Rational t(0);
    for (const auto &row : probs) {
        t += row.at(bob_slot - 1).value();
    }
    return t;
}

JointDistribution joint_distribution(const KsSet &set, int alice_basis, int bob_basis) {
    const Basis &a = set.basis(alice_basis);
    const Basis &b = set.basis(bob_basis);
    for (auto [index, basis] : {std::pair{alice_basis, &a}, std::pair{bob_basis, &b}}) {
        if (!completeness_check(*basis)) {
            throw std::invalid_argument(
                "Basis S" + std::to_string(index) + " does not resolve the identity; the shared state cannot be "
                "re-expressed in it.");
        }
    }
    const ExactProb quarter(1, 4);
    JointDistribution d{alice_basis, bob_basis, {}};
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            d.probs[i][j] = quarter * overlap_prob(a.vectors[i], b.vectors[j]);
        }
    }
    return d;
}

size_t sample_index(std::span<const ExactProb> probs, RandomSource &rng) {
    if (probs.empty()) {
        throw std::invalid_argument("Cannot sample from an empty distribution.");
    }
    constexpr int64_t limit = int64_t{1} << 62;
    int64_t common = 1;
    Rational total(0);
    for (const auto &p : probs) {
        int64_t den = p.denominator();
        int64_t g = std::gcd(common, den);
        if (common / g > limit / den) {
            throw std::overflow_error("Common denominator of the distribution is too large to sample exactly.");
        }
        common = common / g * den;
        total += p.value();
    }
    if (total != Rational(1)) {
        throw std::invalid_argument("Probabilities sum to " + rational_str(total) + ", not 1.");
    }
    auto draw = static_cast<int64_t>(rng.uniform_below(static_cast<uint64_t>(common)));
    int64_t cumulative = 0;
    for (size_t k = 0; k < probs.size(); k++) {
        cumulative += probs[k].numerator() * (common / probs[k].denominator());
        if (draw < cumulative) {
            return k;
        }
    }
    // Unreachable: cumulative ends at `common`.
    throw std::logic_error("sample_index fell off the end of the distribution.");
}

std::pair<int, int> sample_joint(const JointDistribution &d, RandomSource &rng) {
    std::array<ExactProb, 16> flat;
    for (size_t i = 0; i < 4; i++) {
        for (size_t j = 0; j < 4; j++) {
            flat[i * 4 + j] = d.probs[i][j];
        }
    }
    size_t k = sample_index(flat, rng);
    return {static_cast<int>(k / 4) + 1, static_cast<int>(k % 4) + 1};
}

int EntangledPair::measure_alice(int basis) {
    return measure(alice_, bob_, basis);
}

int EntangledPair::measure_bob(int basis) {
    return measure(bob_, alice_, basis);
}

int EntangledPair::measure(std::optional<Outcome> &mine, const std::optional<Outcome> &theirs, int basis) {
    if (mine.has_value()) {
        throw std::logic_error("This half of the entangled pair was already measured.");
    }
    const Basis &b = set_->basis(basis);
    if (!completeness_check(b)) {
        throw std::invalid_argument("Measurement basis S" + std::to_string(basis) + " is not complete.");
    }
    std::array<ExactProb, 4> law;
    if (!theirs.has_value()) {
        law.fill(ExactProb(1, 4));
    } else {
        // Conditional on the partner's outcome u, this half is left in u.
        const IntVec4 &u = set_->basis(theirs->basis).vectors[theirs->slot - 1];
        for (size_t j = 0; j < 4; j++) {
            law[j] = overlap_prob(u, b.vectors[j]);
        }
    }
    int slot = static_cast<int>(sample_index(law, rng_)) + 1;
    mine = Outcome{basis, slot};
    return slot;
}

}  // namespace kstele
