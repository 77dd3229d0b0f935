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

#include <cmath>
#include <gtest/gtest.h>

using namespace kstele;

namespace {

/// (1/4) (u.v)^2 / (|u|^2 |v|^2) from raw coordinates.
Rational oracle_joint_entry(const IntVec4 &u, const IntVec4 &v) {
    int64_t d = 0, nu = 0, nv = 0;
    for (size_t c = 0; c < 4; c++) {
        d += u[c] * v[c];
        nu += u[c] * u[c];
        nv += v[c] * v[c];
    }
    return Rational(d * d, 4 * nu * nv);
}

KsSet deficient_set() {
    return KsSet({Basis{{IntVec4(1, 0, 0, 0), IntVec4(0, 1, 0, 0), IntVec4(0, 0, 1, 0), IntVec4(0, 0, 1, 0)}}});
}

/// Checks empirical cell frequencies against exact probabilities within 4
/// standard errors; zero-probability cells must never occur.
void expect_frequencies_match(
    const std::array<std::array<uint64_t, 4>, 4> &counts, const JointDistribution &d, uint64_t n) {
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            double p = d.probs[i][j].to_double();
            double freq = static_cast<double>(counts[i][j]) / static_cast<double>(n);
            double se = std::sqrt(p * (1 - p) / static_cast<double>(n));
            if (p == 0) {
                EXPECT_EQ(counts[i][j], 0u) << i << "," << j;
            } else {
                EXPECT_LE(std::abs(freq - p), 4 * se) << i << "," << j;
            }
        }
    }
}

}  // namespace

TEST(quantum, overlap_prob_examples) {
    ASSERT_EQ(overlap_prob(IntVec4(0, 0, 0, 1), IntVec4(0, 0, 0, 1)), ExactProb::one());
    ASSERT_EQ(overlap_prob(IntVec4(0, 0, 0, 1), IntVec4(0, 0, 1, 0)), ExactProb::zero());
    ASSERT_EQ(overlap_prob(IntVec4(1, 1, 1, 1), IntVec4(1, 1, 0, 0)), ExactProb(1, 2));
    ASSERT_EQ(overlap_prob(IntVec4(-1, 1, 1, 1), IntVec4(1, -1, -1, -1)), ExactProb::one());
}

TEST(quantum, completeness_check_examples) {
    ASSERT_TRUE(completeness_check(standard_basis_set().basis(1)));
    for (const auto &b : cabello_set().bases()) {
        ASSERT_TRUE(completeness_check(b));
    }
    ASSERT_FALSE(completeness_check(deficient_set().basis(1)));
    // Orthogonal but not spanning is impossible with four nonzero vectors;
    // spanning but not orthogonal must also fail.
    ASSERT_FALSE(completeness_check(
        Basis{{IntVec4(1, 1, 0, 0), IntVec4(1, 0, 0, 0), IntVec4(0, 0, 1, 0), IntVec4(0, 0, 0, 1)}}));
}

TEST(quantum, joint_distribution_s1_s2) {
    JointDistribution d = joint_distribution(cabello_set(), 1, 2);
    ASSERT_EQ(d.alice_basis, 1);
    ASSERT_EQ(d.bob_basis, 2);
    ASSERT_EQ(d.at(1, 1), ExactProb(1, 4));
    ASSERT_EQ(d.at(1, 2), ExactProb::zero());
    const std::array<std::array<Rational, 4>, 4> frozen{{
        {Rational(1, 4), Rational(0), Rational(0), Rational(0)},
        {Rational(0), Rational(0), Rational(1, 8), Rational(1, 8)},
        {Rational(0), Rational(1, 8), Rational(1, 16), Rational(1, 16)},
        {Rational(0), Rational(1, 8), Rational(1, 16), Rational(1, 16)},
    }};
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            Rational oracle =
                oracle_joint_entry(cabello_set().basis(1).vectors[i], cabello_set().basis(2).vectors[j]);
            ASSERT_EQ(oracle, frozen[i][j]);
            ASSERT_EQ(d.probs[i][j].value(), oracle);
        }
    }
}

TEST(quantum, all_basis_pairs_no_signalling) {
    const KsSet &set = cabello_set();
    for (int a = 1; a <= 9; a++) {
        for (int b = 1; b <= 9; b++) {
            JointDistribution d = joint_distribution(set, a, b);
            ASSERT_EQ(d.total(), Rational(1));
            for (int s = 1; s <= 4; s++) {
                ASSERT_EQ(d.alice_marginal(s), Rational(1, 4));
                ASSERT_EQ(d.bob_marginal(s), Rational(1, 4));
            }
            JointDistribution t = joint_distribution(set, b, a);
            for (int i = 1; i <= 4; i++) {
                for (int j = 1; j <= 4; j++) {
                    ASSERT_EQ(d.at(i, j), t.at(j, i));
                    ASSERT_EQ(
                        d.at(i, j).value(),
                        oracle_joint_entry(set.basis(a).vectors[i - 1], set.basis(b).vectors[j - 1]));
                }
            }
            if (a == b) {
                for (int i = 1; i <= 4; i++) {
                    for (int j = 1; j <= 4; j++) {
                        ASSERT_EQ(d.at(i, j), i == j ? ExactProb(1, 4) : ExactProb::zero());
                    }
                }
            }
        }
    }
}

TEST(quantum, joint_distribution_rejects_incomplete_basis) {
    KsSet set = deficient_set();
    ASSERT_THROW(joint_distribution(set, 1, 1), std::invalid_argument);
}

TEST(quantum, sample_joint_diagonal_and_point_mass) {
    JointDistribution diag = joint_distribution(cabello_set(), 4, 4);
    for (uint64_t seed = 0; seed < 200; seed++) {
        RandomSource rng(seed);
        auto [a, b] = sample_joint(diag, rng);
        ASSERT_EQ(a, b);
    }
    JointDistribution point{1, 1, {}};
    point.probs[1][2] = ExactProb::one();
    RandomSource rng(99);
    for (int k = 0; k < 100; k++) {
        ASSERT_EQ(sample_joint(point, rng), std::make_pair(2, 3));
    }
}

TEST(quantum, sample_joint_deterministic_given_seed) {
    JointDistribution d = joint_distribution(cabello_set(), 3, 7);
    RandomSource a(5), b(5);
    for (int k = 0; k < 1000; k++) {
        ASSERT_EQ(sample_joint(d, a), sample_joint(d, b));
    }
}

TEST(quantum, sample_joint_empirical_frequencies) {
    const uint64_t n = 100000;
    for (auto [x, y] : std::vector<std::pair<int, int>>{{1, 2}, {3, 6}, {5, 5}}) {
        JointDistribution d = joint_distribution(cabello_set(), x, y);
        RandomSource rng(derive_seed(17, x * 10 + y));
        std::array<std::array<uint64_t, 4>, 4> counts{};
        for (uint64_t k = 0; k < n; k++) {
            auto [i, j] = sample_joint(d, rng);
            counts[i - 1][j - 1]++;
        }
        expect_frequencies_match(counts, d, n);
    }
}

TEST(quantum, sample_index_rejects_bad_weights) {
    RandomSource rng(1);
    std::vector<ExactProb> half{ExactProb(1, 2)};
    ASSERT_THROW(sample_index(half, rng), std::invalid_argument);
    ASSERT_THROW(sample_index(std::vector<ExactProb>{}, rng), std::invalid_argument);
}

TEST(quantum, entangled_pair_follows_joint_law_in_either_order) {
    const KsSet &set = cabello_set();
    const uint64_t n = 100000;
    JointDistribution d = joint_distribution(set, 1, 2);
    std::array<std::array<uint64_t, 4>, 4> alice_first{}, bob_first{};
    for (uint64_t k = 0; k < n; k++) {
        EntangledPair p(set, RandomSource(derive_seed(1, k)));
        int a = p.measure_alice(1);
        int b = p.measure_bob(2);
        alice_first[a - 1][b - 1]++;

        EntangledPair q(set, RandomSource(derive_seed(2, k)));
        int b2 = q.measure_bob(2);
        int a2 = q.measure_alice(1);
        bob_first[a2 - 1][b2 - 1]++;
    }
    expect_frequencies_match(alice_first, d, n);
    expect_frequencies_match(bob_first, d, n);
}

TEST(quantum, entangled_pair_same_basis_always_agrees) {
    const KsSet &set = cabello_set();
    for (uint64_t k = 0; k < 2000; k++) {
        int basis = 1 + static_cast<int>(k % 9);
        EntangledPair p(set, RandomSource(k));
        ASSERT_EQ(p.measure_alice(basis), p.measure_bob(basis));
    }
}

TEST(quantum, entangled_pair_measures_once) {
    EntangledPair p(cabello_set(), RandomSource(0));
    p.measure_alice(1);
    ASSERT_THROW(p.measure_alice(2), std::logic_error);
    p.measure_bob(3);
    ASSERT_THROW(p.measure_bob(3), std::logic_error);
}
