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

#include "kstele/strategies.h"

#include <gtest/gtest.h>

#include "kstele/harness.h"

using namespace kstele;

namespace {

/// Wins of a deterministic strategy over all questions, by playing each
/// question through evaluate_win.
int64_t oracle_wins(const KsSet &set, const std::vector<int> &alice, const NcAssignment &bob) {
    int64_t wins = 0;
    for (int k = 1; k <= static_cast<int>(set.num_bases()); k++) {
        for (int s = 1; s <= 4; s++) {
            BobAnswer b{bob.values[set.ray_at(k, s)]};
            wins += evaluate_win(Question{k, s}, AliceAnswer::marking(alice[k - 1]), b);
        }
    }
    return wins;
}

/// Best classical wins by brute force: every Bob table, and for each basis
/// every Alice slot, scored through evaluate_win.
int64_t oracle_best_wins(const KsSet &set) {
    size_t n = set.num_rays();
    int64_t best = -1;
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); mask++) {
        int64_t wins = 0;
        for (int k = 1; k <= static_cast<int>(set.num_bases()); k++) {
            int64_t basis_best = 0;
            for (int choice = 1; choice <= 4; choice++) {
                int64_t w = 0;
                for (int s = 1; s <= 4; s++) {
                    BobAnswer b{static_cast<uint8_t>((mask >> set.ray_at(k, s)) & 1)};
                    w += evaluate_win(Question{k, s}, AliceAnswer::marking(choice), b);
                }
                basis_best = std::max(basis_best, w);
            }
            wins += basis_best;
        }
        best = std::max(best, wins);
    }
    return best;
}

DeterministicStrategy random_deterministic(const KsSet &set, RandomSource &rng) {
    std::vector<int> alice(set.num_bases());
    for (int &s : alice) {
        s = 1 + static_cast<int>(rng.uniform_below(4));
    }
    NcAssignment bob{std::vector<uint8_t>(set.num_rays())};
    for (auto &v : bob.values) {
        v = static_cast<uint8_t>(rng.uniform_below(2));
    }
    return DeterministicStrategy(set, alice, bob);
}

CanonicalVec ray(int a, int b, int c, int d) {
    return canonicalize(IntVec4(a, b, c, d));
}

}  // namespace

TEST(strategies, channel_meters_both_directions) {
    Channel ch;
    ASSERT_FALSE(ch.receive_from_alice().has_value());
    ch.send_to_bob(1);
    ch.send_to_bob(0);
    ch.send_to_alice(1);
    ASSERT_EQ(ch.bits_alice_to_bob(), 2u);
    ASSERT_EQ(ch.bits_bob_to_alice(), 1u);
    ASSERT_EQ(ch.bits_sent(), 3u);
    ASSERT_EQ(ch.receive_from_alice(), std::optional<uint8_t>(1));
    ASSERT_EQ(ch.receive_from_alice(), std::optional<uint8_t>(0));
    ASSERT_FALSE(ch.receive_from_alice().has_value());
    ASSERT_EQ(ch.receive_from_bob(), std::optional<uint8_t>(1));
}

TEST(strategies, quantum_bob_uses_lowest_containing_basis) {
    QuantumStrategy q(cabello_set());
    ASSERT_EQ(q.bob_context(ray(1, -1, 1, -1)), (Occurrence{3, 1}));
    ASSERT_EQ(q.bob_context(ray(-1, 1, 1, 1)), (Occurrence{8, 2}));
    ASSERT_EQ(q.bob_context(ray(0, 0, 0, 1)), (Occurrence{1, 1}));
}

TEST(strategies, quantum_wins_every_question_exactly) {
    QuantumStrategy q(cabello_set());
    for (int k = 1; k <= 9; k++) {
        for (int s = 1; s <= 4; s++) {
            Question question{k, s};
            auto outcomes = *q.answer_distribution(question);
            Rational total(0), loss(0);
            for (const auto &o : outcomes) {
                total += o.prob.value();
                ASSERT_EQ(o.bits_alice_to_bob + o.bits_bob_to_alice, 0u);
                if (!evaluate_win(question, o.alice, o.bob)) {
                    loss += o.prob.value();
                }
            }
            ASSERT_EQ(total, Rational(1));
            ASSERT_EQ(loss, Rational(0)) << "S" << k << " slot " << s;
        }
    }
}

TEST(strategies, quantum_rounds_use_no_channel) {
    QuantumStrategy q(cabello_set());
    for (uint64_t seed = 0; seed < 500; seed++) {
        RoundResources res(cabello_set(), seed);
        Channel ch;
        int k = 1 + static_cast<int>(seed % 9);
        int s = 1 + static_cast<int>((seed / 9) % 4);
        AliceAnswer a = q.alice_answer(k, res, ch);
        BobAnswer b = q.bob_answer(canonicalize(cabello_set().vector_at({k, s})), res, ch);
        ASSERT_TRUE(evaluate_win(Question{k, s}, a, b));
        ASSERT_EQ(ch.bits_sent(), 0u);
    }
}

TEST(strategies, quantum_rejects_incomplete_bases) {
    KsSet bad({Basis{{IntVec4(1, 0, 0, 0), IntVec4(0, 1, 0, 0), IntVec4(0, 0, 1, 0), IntVec4(0, 0, 1, 0)}}});
    ASSERT_THROW(QuantumStrategy{bad}, std::invalid_argument);
}

TEST(strategies, deterministic_examples) {
    const KsSet &set = cabello_set();
    std::vector<int> alice(9, 1);
    // An all-zeros table loses exactly the question on Alice's marked slot.
    DeterministicStrategy zeros(set, alice, NcAssignment{std::vector<uint8_t>(18, 0)});
    for (int k = 1; k <= 9; k++) {
        for (int slot = 1; slot <= 4; slot++) {
            ASSERT_EQ(exact_win_probability(zeros, Question{k, slot}), slot == 1 ? ExactProb::zero() : ExactProb::one());
        }
    }
    ASSERT_EQ(exact_win_probability(zeros), ExactProb(3, 4));
    ASSERT_EQ(zeros.name(), "deterministic");

    // Table marks exactly Alice's choice in S1 and S2 (both choose (0,0,0,1)).
    NcAssignment table{std::vector<uint8_t>(18, 0)};
    table.values[set.ray_id(ray(0, 0, 0, 1))] = 1;
    DeterministicStrategy s(set, alice, table);
    for (int slot = 1; slot <= 4; slot++) {
        ASSERT_EQ(exact_win_probability(s, Question{1, slot}), ExactProb::one());
        ASSERT_EQ(exact_win_probability(s, Question{2, slot}), ExactProb::one());
    }

    ASSERT_THROW(DeterministicStrategy(set, std::vector<int>(8, 1), table), std::invalid_argument);
    ASSERT_THROW(DeterministicStrategy(set, std::vector<int>(9, 5), table), std::invalid_argument);
    ASSERT_THROW(DeterministicStrategy(set, alice, NcAssignment{std::vector<uint8_t>(17, 0)}), std::invalid_argument);
}

TEST(strategies, no_deterministic_strategy_is_perfect) {
    const KsSet &set = cabello_set();
    RandomSource rng(77);
    for (int trial = 0; trial < 2000; trial++) {
        DeterministicStrategy s = random_deterministic(set, rng);
        ExactProb p = exact_win_probability(s);
        ASSERT_LE(p, ExactProb(35, 36));
        ASSERT_EQ(p, ExactProb(oracle_wins(set, s.alice_choices(), s.bob_table()), 36));
    }
}

TEST(strategies, best_classical_cabello) {
    BestClassical best = best_classical(cabello_set());
    ASSERT_EQ(best.win_prob, ExactProb(35, 36));
    ASSERT_EQ(best.min_losses, 1u);
    ASSERT_EQ(exact_win_probability(best.strategy), ExactProb(35, 36));
    ASSERT_EQ(oracle_best_wins(cabello_set()), 35);
    // One lost question per contextual vector.
    ASSERT_EQ(best.min_losses, min_contextuality(cabello_set()).defect);
}

TEST(strategies, best_classical_small_sets) {
    BestClassical single = best_classical(standard_basis_set());
    ASSERT_EQ(single.win_prob, ExactProb::one());
    ASSERT_EQ(single.strategy.alice_choices(), std::vector<int>{1});

    KsSet pair = cabello_set().restricted({1, 2});
    BestClassical b = best_classical(pair);
    ASSERT_EQ(b.win_prob, ExactProb::one());
    ASSERT_EQ(oracle_best_wins(pair), 8);
    ASSERT_EQ(exact_win_probability(b.strategy), ExactProb::one());
}

TEST(strategies, best_classical_matches_oracle_on_subsets) {
    // Every 3-basis sub-collection of the canonical set.
    for (int a = 1; a <= 9; a++) {
        for (int b = a + 1; b <= 9; b++) {
            for (int c = b + 1; c <= 9; c++) {
                KsSet set = cabello_set().restricted({a, b, c});
                BestClassical best = best_classical(set);
                ASSERT_EQ(best.win_prob, ExactProb(oracle_best_wins(set), 12));
                ASSERT_EQ(exact_win_probability(best.strategy), best.win_prob);
            }
        }
    }
}

TEST(strategies, one_cbit_witness) {
    OneCbitStrategy s(cabello_set());
    const auto &w = s.witness();
    ASSERT_EQ(w.defect, 1u);
    ASSERT_EQ(w.mismatched, std::vector<CanonicalVec>{ray(0, 0, 0, 1)});
    ASSERT_EQ(w.witness.value(Occurrence{1, 1}), 1);
    ASSERT_EQ(w.witness.value(Occurrence{2, 1}), 0);
    ASSERT_TRUE(s.uses_communication());
}

TEST(strategies, one_cbit_wins_everything_with_one_bit) {
    OneCbitStrategy s(cabello_set());
    for (int k = 1; k <= 9; k++) {
        for (int slot = 1; slot <= 4; slot++) {
            RoundResources res(cabello_set(), 0);
            Channel ch;
            AliceAnswer a = s.alice_answer(k, res, ch);
            BobAnswer b = s.bob_answer(canonicalize(cabello_set().vector_at({k, slot})), res, ch);
            ASSERT_TRUE(evaluate_win(Question{k, slot}, a, b)) << "S" << k << " slot " << slot;
            ASSERT_EQ(ch.bits_alice_to_bob(), 1u);
            ASSERT_EQ(ch.bits_bob_to_alice(), 0u);
        }
    }
    ASSERT_EQ(exact_win_probability(s), ExactProb::one());
}

TEST(strategies, one_cbit_trace_s2_slot1) {
    OneCbitStrategy s(cabello_set());
    RoundResources res(cabello_set(), 0);
    Channel ch;
    AliceAnswer a = s.alice_answer(2, res, ch);
    ASSERT_EQ(a.bits[0], 0);
    BobAnswer b = s.bob_answer(ray(0, 0, 0, 1), res, ch);
    ASSERT_EQ(b.bit, 0);
    ASSERT_TRUE(evaluate_win(Question{2, 1}, a, b));

    // Without the bit, Bob cannot answer.
    Channel silent;
    ASSERT_THROW(s.bob_answer(ray(0, 0, 0, 1), res, silent), std::runtime_error);
}

TEST(strategies, mixture_of_one_matches_component) {
    RandomSource rng(3);
    DeterministicStrategy d = random_deterministic(cabello_set(), rng);
    MixtureStrategy m({{ExactProb::one(), d}});
    ASSERT_EQ(exact_win_probability(m), exact_win_probability(d));
    for (int k = 1; k <= 9; k++) {
        RoundResources res(cabello_set(), k);
        Channel ch;
        ASSERT_EQ(m.alice_answer(k, res, ch), d.alice_answer(k));
        for (int s = 1; s <= 4; s++) {
            CanonicalVec v = canonicalize(cabello_set().vector_at({k, s}));
            ASSERT_EQ(m.bob_answer(v, res, ch), d.bob_answer(v));
        }
        ASSERT_EQ(ch.bits_sent(), 0u);
    }
}

TEST(strategies, mixture_win_probability_is_linear_and_bounded) {
    const KsSet &set = cabello_set();
    RandomSource rng(11);
    DeterministicStrategy best = best_classical(set).strategy;
    for (int trial = 0; trial < 100; trial++) {
        size_t count = 1 + rng.uniform_below(4);
        std::vector<int64_t> raw(count);
        int64_t total = 0;
        for (auto &w : raw) {
            w = 1 + static_cast<int64_t>(rng.uniform_below(10));
            total += w;
        }
        std::vector<MixtureStrategy::Component> comps;
        Rational expected(0);
        for (size_t c = 0; c < count; c++) {
            DeterministicStrategy d = (trial % 5 == 0 && c == 0) ? best : random_deterministic(set, rng);
            ExactProb w(raw[c], total);
            expected += w.value() * exact_win_probability(d).value();
            comps.push_back({w, d});
        }
        MixtureStrategy m(comps);
        ExactProb p = exact_win_probability(m);
        ASSERT_EQ(p.value(), expected);
        ASSERT_LE(p, ExactProb(35, 36));
    }
}

TEST(strategies, mixture_rejects_bad_weights) {
    RandomSource rng(1);
    DeterministicStrategy d = random_deterministic(cabello_set(), rng);
    ASSERT_THROW(MixtureStrategy({{ExactProb(1, 2), d}}), std::invalid_argument);
    ASSERT_THROW(MixtureStrategy({}), std::invalid_argument);
    DeterministicStrategy other = random_deterministic(standard_basis_set(), rng);
    ASSERT_THROW(MixtureStrategy({{ExactProb(1, 2), d}, {ExactProb(1, 2), other}}), std::invalid_argument);
}

TEST(strategies, bob_cannot_tell_which_basis_his_vector_came_from) {
    const KsSet &set = cabello_set();
    RandomSource rng(8);
    std::vector<std::unique_ptr<Strategy>> strategies;
    strategies.push_back(std::make_unique<QuantumStrategy>(set));
    strategies.push_back(std::make_unique<DeterministicStrategy>(best_classical(set).strategy));
    strategies.push_back(std::make_unique<MixtureStrategy>(std::vector<MixtureStrategy::Component>{
        {ExactProb(1, 3), random_deterministic(set, rng)}, {ExactProb(2, 3), random_deterministic(set, rng)}}));
    for (const auto &s : strategies) {
        for (size_t r = 0; r < set.num_rays(); r++) {
            const auto &occs = set.occurrences(r);
            ASSERT_EQ(occs.size(), 2u);
            for (uint64_t seed = 0; seed < 20; seed++) {
                // Same vector, same randomness, question drawn from either
                // containing basis: Bob's view and answer are identical.
                CanonicalVec v0 = canonicalize(set.vector_at(occs[0]));
                CanonicalVec v1 = canonicalize(set.vector_at(occs[1]));
                ASSERT_EQ(v0, v1);
                RoundResources r0(set, seed), r1(set, seed);
                Channel c0, c1;
                ASSERT_EQ(s->bob_answer(v0, r0, c0), s->bob_answer(v1, r1, c1)) << s->name();
            }
        }
    }
}
