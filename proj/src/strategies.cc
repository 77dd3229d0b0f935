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

#include <stdexcept>

namespace kstele {

AliceAnswer AliceAnswer::marking(int slot) {
    AliceAnswer a;
    a.bits.at(slot - 1) = 1;
    return a;
}

void Channel::send_to_bob(uint8_t bit) {
    to_bob_.push_back(bit ? 1 : 0);
}

void Channel::send_to_alice(uint8_t bit) {
    to_alice_.push_back(bit ? 1 : 0);
}

std::optional<uint8_t> Channel::receive_from_alice() {
    if (read_by_bob_ >= to_bob_.size()) {
        return std::nullopt;
    }
    return to_bob_[read_by_bob_++];
}

std::optional<uint8_t> Channel::receive_from_bob() {
    if (read_by_alice_ >= to_alice_.size()) {
        return std::nullopt;
    }
    return to_alice_[read_by_alice_++];
}

RoundResources::RoundResources(const KsSet &set, uint64_t round_seed)
    : shared_seed_(derive_seed(round_seed, 1)),
      alice_(derive_seed(round_seed, 2)),
      bob_(derive_seed(round_seed, 3)),
      pair_(set, RandomSource(derive_seed(round_seed, 4))) {
}

// ---------------------------------------------------------------------------
// Quantum

QuantumStrategy::QuantumStrategy(KsSet set) : Strategy(std::move(set)) {
    for (size_t k = 1; k <= this->set().num_bases(); k++) {
        if (!completeness_check(this->set().basis(static_cast<int>(k)))) {
            throw std::invalid_argument(
                "The quantum strategy needs every basis to be complete; S" + std::to_string(k) + " is not.");
        }
    }
}

Occurrence QuantumStrategy::bob_context(const CanonicalVec &v) const {
    // Occurrences are listed basis-major, so the first is the lowest index.
    return set().occurrences(v).front();
}

AliceAnswer QuantumStrategy::alice_answer(int alice_set, RoundResources &res, Channel &) const {
    return AliceAnswer::marking(res.entangled().measure_alice(alice_set));
}

BobAnswer QuantumStrategy::bob_answer(const CanonicalVec &bob_vector, RoundResources &res, Channel &) const {
    Occurrence ctx = bob_context(bob_vector);
    int outcome = res.entangled().measure_bob(ctx.basis);
    return BobAnswer{static_cast<uint8_t>(outcome == ctx.slot)};
}

std::optional<std::vector<AnswerOutcome>> QuantumStrategy::answer_distribution(const Question &q) const {
    Occurrence ctx = bob_context(canonicalize(set().vector_at(Occurrence{q.alice_set, q.bob_slot})));
    JointDistribution d = joint_distribution(set(), q.alice_set, ctx.basis);
    std::vector<AnswerOutcome> out;
    for (int i = 1; i <= 4; i++) {
        for (int j = 1; j <= 4; j++) {
            if (d.at(i, j) == ExactProb::zero()) {
                continue;
            }
            out.push_back(AnswerOutcome{d.at(i, j), AliceAnswer::marking(i), BobAnswer{uint8_t(j == ctx.slot)}});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Deterministic

DeterministicStrategy::DeterministicStrategy(KsSet set, std::vector<int> alice_choices, NcAssignment bob_table)
    : Strategy(std::move(set)), alice_choices_(std::move(alice_choices)), bob_table_(std::move(bob_table)) {
    if (alice_choices_.size() != this->set().num_bases()) {
        throw std::invalid_argument("Alice needs exactly one chosen slot per basis.");
    }
    for (int s : alice_choices_) {
        if (s < 1 || s > 4) {
            throw std::invalid_argument("Alice's chosen slot " + std::to_string(s) + " is not in 1..4.");
        }
    }
    if (bob_table_.values.size() != this->set().num_rays()) {
        throw std::invalid_argument("Bob's table must give one value per distinct vector.");
    }
    for (uint8_t v : bob_table_.values) {
        if (v > 1) {
            throw std::invalid_argument("Bob's table values must be 0 or 1.");
        }
    }
}

AliceAnswer DeterministicStrategy::alice_answer(int alice_set) const {
    return AliceAnswer::marking(alice_choices_.at(alice_set - 1));
}

BobAnswer DeterministicStrategy::bob_answer(const CanonicalVec &bob_vector) const {
    return BobAnswer{bob_table_.value(set(), bob_vector)};
}

AliceAnswer DeterministicStrategy::alice_answer(int alice_set, RoundResources &, Channel &) const {
    return alice_answer(alice_set);
}

BobAnswer DeterministicStrategy::bob_answer(const CanonicalVec &bob_vector, RoundResources &, Channel &) const {
    return bob_answer(bob_vector);
}

std::optional<std::vector<AnswerOutcome>> DeterministicStrategy::answer_distribution(const Question &q) const {
    CanonicalVec v = canonicalize(set().vector_at(Occurrence{q.alice_set, q.bob_slot}));
    return std::vector<AnswerOutcome>{{ExactProb::one(), alice_answer(q.alice_set), bob_answer(v)}};
}

BestClassical best_classical(const KsSet &set) {
    size_t num_rays = set.num_rays();
    if (num_rays > MAX_SEARCH_RAYS) {
        throw SearchTooLarge(
            "Refusing to enumerate 2^" + std::to_string(num_rays) + " Bob tables (limit 2^" +
            std::to_string(MAX_SEARCH_RAYS) + ").");
    }
    size_t num_bases = set.num_bases();
    // Ray r is bit (num_rays - 1 - r) of the table index, so increasing
    // indices visit tables in lexicographic order of the value vector.
    std::vector<std::array<size_t, 4>> shifts(num_bases);
    for (size_t k = 0; k < num_bases; k++) {
        for (int s = 1; s <= 4; s++) {
            shifts[k][s - 1] = num_rays - 1 - set.ray_at(static_cast<int>(k + 1), s);
        }
    }

    // Alice's lexicographically least optimal reply to a table: the first
    // slot the table marks, or slot 1 when it marks none.
    auto alice_reply = [&](uint64_t table) {
        std::vector<int> alice(num_bases, 1);
        for (size_t k = 0; k < num_bases; k++) {
            for (size_t s = 0; s < 4; s++) {
                if ((table >> shifts[k][s]) & 1) {
                    alice[k] = static_cast<int>(s + 1);
                    break;
                }
            }
        }
        return alice;
    };

    // Optimal strategies are ordered by Alice's slot tuple, then by table.
    size_t best_losses = SIZE_MAX;
    uint64_t best_table = 0;
    std::vector<int> best_alice;
    uint64_t end = uint64_t{1} << num_rays;
    for (uint64_t table = 0; table < end; table++) {
        size_t losses = 0;
        for (size_t k = 0; k < num_bases && losses <= best_losses; k++) {
            int ones = 0;
            for (size_t s = 0; s < 4; s++) {
                ones += (table >> shifts[k][s]) & 1;
            }
            losses += ones == 0 ? 1 : ones - 1;
        }
        if (losses > best_losses) {
            continue;
        }
        std::vector<int> alice = alice_reply(table);
        if (losses < best_losses || alice < best_alice) {
            best_losses = losses;
            best_table = table;
            best_alice = std::move(alice);
        }
    }

    NcAssignment bob{std::vector<uint8_t>(num_rays)};
    for (size_t r = 0; r < num_rays; r++) {
        bob.values[r] = (best_table >> (num_rays - 1 - r)) & 1;
    }
    std::vector<int> alice = std::move(best_alice);
    auto questions = static_cast<int64_t>(4 * num_bases);
    return BestClassical{
        ExactProb(questions - static_cast<int64_t>(best_losses), questions),
        best_losses,
        DeterministicStrategy(set, std::move(alice), std::move(bob)),
    };
}

// ---------------------------------------------------------------------------
// One classical bit

OneCbitStrategy::OneCbitStrategy(KsSet set) : Strategy(std::move(set)) {
    const KsSet &s = this->set();
    contextual_ray_ = s.ray_at(1, 1);
    const auto &occs = s.occurrences(contextual_ray_);
    if (occs.size() != 2) {
        throw std::invalid_argument("The one-bit strategy needs the first vector of S1 to occur in exactly two bases.");
    }
    auto found = min_contextuality_where(s, [&](const CtxAssignment &a) {
        if (a.value(occs[0]) != 1) {
            return false;
        }
        auto mismatched = mismatched_rays(s, a);
        return mismatched.size() == 1 && mismatched[0] == contextual_ray_;
    });
    if (!found.has_value()) {
        throw std::invalid_argument(
            "No contextual assignment has " + s.rays()[contextual_ray_].str() + " as its only contextual vector.");
    }
    witness_ = std::move(*found);
    table_.resize(s.num_rays());
    for (size_t r = 0; r < s.num_rays(); r++) {
        table_[r] = witness_.witness.value(s.occurrences(r).front());
    }
}

AliceAnswer OneCbitStrategy::alice_answer(int alice_set, RoundResources &, Channel &channel) const {
    channel.send_to_bob(alice_set == 1 ? 0 : 1);
    return AliceAnswer::marking(witness_.witness.choices.at(alice_set - 1));
}

BobAnswer OneCbitStrategy::bob_answer(const CanonicalVec &bob_vector, RoundResources &, Channel &channel) const {
    auto bit = channel.receive_from_alice();
    if (!bit.has_value()) {
        throw std::runtime_error("Bob expected a bit from Alice.");
    }
    size_t r = set().ray_id(bob_vector);
    if (r != contextual_ray_) {
        return BobAnswer{table_[r]};
    }
    const auto &occs = set().occurrences(r);
    return BobAnswer{witness_.witness.value(*bit == 0 ? occs[0] : occs[1])};
}

std::optional<std::vector<AnswerOutcome>> OneCbitStrategy::answer_distribution(const Question &q) const {
    // Deterministic: replay the protocol once with throwaway resources.
    RoundResources res(set(), 0);
    Channel channel;
    AliceAnswer a = alice_answer(q.alice_set, res, channel);
    BobAnswer b = bob_answer(canonicalize(set().vector_at(Occurrence{q.alice_set, q.bob_slot})), res, channel);
    return std::vector<AnswerOutcome>{
        {ExactProb::one(), a, b, channel.bits_alice_to_bob(), channel.bits_bob_to_alice()}};
}

// ---------------------------------------------------------------------------
// Shared randomness

namespace {

const KsSet &mixture_set(const std::vector<MixtureStrategy::Component> &components) {
    if (components.empty()) {
        throw std::invalid_argument("A mixture needs at least one component.");
    }
    return components.front().strategy.set();
}

}  // namespace

MixtureStrategy::MixtureStrategy(std::vector<Component> components)
    : Strategy(mixture_set(components)), components_(std::move(components)) {
    Rational total(0);
    for (const auto &c : components_) {
        if (!(c.strategy.set() == set())) {
            throw std::invalid_argument("All mixture components must play on the same vector set.");
        }
        total += c.weight.value();
        weights_.push_back(c.weight);
    }
    if (total != Rational(1)) {
        throw std::invalid_argument("Mixture weights sum to " + rational_str(total) + ", not 1.");
    }
}

size_t MixtureStrategy::draw(const RoundResources &res) const {
    RandomSource shared = res.shared();
    return sample_index(weights_, shared);
}

AliceAnswer MixtureStrategy::alice_answer(int alice_set, RoundResources &res, Channel &) const {
    return components_[draw(res)].strategy.alice_answer(alice_set);
}

BobAnswer MixtureStrategy::bob_answer(const CanonicalVec &bob_vector, RoundResources &res, Channel &) const {
    return components_[draw(res)].strategy.bob_answer(bob_vector);
}

std::optional<std::vector<AnswerOutcome>> MixtureStrategy::answer_distribution(const Question &q) const {
    std::vector<AnswerOutcome> out;
    for (const auto &c : components_) {
        auto component = c.strategy.answer_distribution(q);
        for (auto outcome : *component) {
            outcome.prob = outcome.prob * c.weight;
            out.push_back(outcome);
        }
    }
    return out;
}

}  // namespace kstele
