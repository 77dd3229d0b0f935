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

#ifndef KSTELE_STRATEGIES_H
#define KSTELE_STRATEGIES_H

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kstele/coloring.h"
#include "kstele/exact_prob.h"
#include "kstele/ks_set.h"
#include "kstele/quantum.h"
#include "kstele/random.h"

namespace kstele {

/// One round's questions: Alice receives basis S^alice_set and Bob receives
/// the vector in slot bob_slot of that basis. Both 1-based.
struct Question {
    int alice_set;
    int bob_slot;

    bool operator==(const Question &other) const = default;
};

/// One bit per slot of Alice's basis. Not required to contain exactly one 1;
/// answers that don't are scored as losses.
struct AliceAnswer {
    std::array<uint8_t, 4> bits{};

    static AliceAnswer marking(int slot);
    bool operator==(const AliceAnswer &other) const = default;
};

struct BobAnswer {
    uint8_t bit = 0;

    bool operator==(const BobAnswer &other) const = default;
};

/// Classical bits exchanged within one round. Alice->Bob and Bob->Alice
/// traffic are buffered and counted separately.
class Channel {
   public:
    void send_to_bob(uint8_t bit);
    void send_to_alice(uint8_t bit);
    /// Next unread bit from the other side, if any.
    std::optional<uint8_t> receive_from_alice();
    std::optional<uint8_t> receive_from_bob();

    size_t bits_alice_to_bob() const {
        return to_bob_.size();
    }
    size_t bits_bob_to_alice() const {
        return to_alice_.size();
    }
    size_t bits_sent() const {
        return to_bob_.size() + to_alice_.size();
    }

   private:
    std::vector<uint8_t> to_bob_;
    std::vector<uint8_t> to_alice_;
    size_t read_by_bob_ = 0;
    size_t read_by_alice_ = 0;
};

/// Everything the players share or own privately in one round: a shared
/// random seed (both players see the same stream), a private stream each, and
/// one copy of the maximally entangled pair.
class RoundResources {
   public:
    RoundResources(const KsSet &set, uint64_t round_seed);

    /// A fresh copy of the shared stream. Both players get the same draws.
    RandomSource shared() const {
        return RandomSource(shared_seed_);
    }
    RandomSource &alice_local() {
        return alice_;
    }
    RandomSource &bob_local() {
        return bob_;
    }
    EntangledPair &entangled() {
        return pair_;
    }

   private:
    uint64_t shared_seed_;
    RandomSource alice_;
    RandomSource bob_;
    EntangledPair pair_;
};

/// One possible outcome of a round, with its exact probability.
struct AnswerOutcome {
    ExactProb prob;
    AliceAnswer alice;
    BobAnswer bob;
    size_t bits_alice_to_bob = 0;
    size_t bits_bob_to_alice = 0;
};

/// A two-player strategy for the game on a fixed vector set.
///
/// `alice_answer` sees only her basis index; `bob_answer` sees only his vector
/// as a ray, never the basis it was drawn from. Implementations must be safe
/// to call concurrently from different rounds unless `serial()` is true.
class Strategy {
   public:
    explicit Strategy(KsSet set) : set_(std::move(set)) {
    }
    virtual ~Strategy() = default;

    const KsSet &set() const {
        return set_;
    }
    virtual std::string name() const = 0;
    /// False for strategies that must not write to the channel; the referee
    /// scores any round where such a strategy communicates as a loss.
    virtual bool uses_communication() const {
        return false;
    }
    virtual bool serial() const {
        return false;
    }

    virtual AliceAnswer alice_answer(int alice_set, RoundResources &res, Channel &channel) const = 0;
    virtual BobAnswer bob_answer(const CanonicalVec &bob_vector, RoundResources &res, Channel &channel) const = 0;

    /// Exact law of the round's answers for a given question, or none if the
    /// strategy has no exact analysis.
    virtual std::optional<std::vector<AnswerOutcome>> answer_distribution(const Question &q) const {
        (void)q;
        return std::nullopt;
    }

   private:
    KsSet set_;
};

/// Measures in the given basis; Bob measures in the lowest-index basis that
/// contains his vector and answers 1 iff he lands on it.
class QuantumStrategy final : public Strategy {
   public:
    /// Throws std::invalid_argument if some basis fails completeness_check.
    explicit QuantumStrategy(KsSet set);

    std::string name() const override {
        return "quantum";
    }
    AliceAnswer alice_answer(int alice_set, RoundResources &res, Channel &channel) const override;
    BobAnswer bob_answer(const CanonicalVec &bob_vector, RoundResources &res, Channel &channel) const override;
    std::optional<std::vector<AnswerOutcome>> answer_distribution(const Question &q) const override;

    /// The (basis, slot) Bob measures for a given vector.
    Occurrence bob_context(const CanonicalVec &v) const;
};

/// Alice marks a fixed slot per basis; Bob reads a fixed table.
class DeterministicStrategy final : public Strategy {
   public:
    /// alice_choices: one slot (1..4) per basis. bob_table: total on the set's rays.
    DeterministicStrategy(KsSet set, std::vector<int> alice_choices, NcAssignment bob_table);

    std::string name() const override {
        return "deterministic";
    }
    AliceAnswer alice_answer(int alice_set, RoundResources &res, Channel &channel) const override;
    BobAnswer bob_answer(const CanonicalVec &bob_vector, RoundResources &res, Channel &channel) const override;
    std::optional<std::vector<AnswerOutcome>> answer_distribution(const Question &q) const override;

    AliceAnswer alice_answer(int alice_set) const;
    BobAnswer bob_answer(const CanonicalVec &bob_vector) const;

    const std::vector<int> &alice_choices() const {
        return alice_choices_;
    }
    const NcAssignment &bob_table() const {
        return bob_table_;
    }

   private:
    std::vector<int> alice_choices_;
    NcAssignment bob_table_;
};

struct BestClassical {
    ExactProb win_prob;
    /// Minimum over Bob tables of sum_k |t_k - 1|, t_k = ones the table puts in basis k.
    size_t min_losses;
    DeterministicStrategy strategy;
};

/// Exhaustive optimum over deterministic no-communication strategies.
///
/// Enumerates all 2^R Bob tables; for a fixed table each basis is optimized
/// on its own (mark the first slot the table marks, slot 1 if none), losing
/// |t - 1| of its 4 questions. Among optimal strategies returns the one with
/// the lexicographically least Alice slot tuple, ties broken by the least
/// table. Throws SearchTooLarge beyond MAX_SEARCH_RAYS rays.
BestClassical best_classical(const KsSet &set);

/// Wins every question with one bit from Alice telling Bob whether her basis
/// is S^1.
///
/// Both players hold the minimum-contextuality witness whose only contextual
/// ray is the first vector of S^1, valued 1 there and 0 in its other basis.
/// Bob reads the bit to pick the right context for that one ray.
class OneCbitStrategy final : public Strategy {
   public:
    /// Throws std::invalid_argument if no such witness exists for `set`.
    explicit OneCbitStrategy(KsSet set);

    std::string name() const override {
        return "one-cbit";
    }
    bool uses_communication() const override {
        return true;
    }
    AliceAnswer alice_answer(int alice_set, RoundResources &res, Channel &channel) const override;
    BobAnswer bob_answer(const CanonicalVec &bob_vector, RoundResources &res, Channel &channel) const override;
    std::optional<std::vector<AnswerOutcome>> answer_distribution(const Question &q) const override;

    const ContextualityResult &witness() const {
        return witness_;
    }

   private:
    ContextualityResult witness_;
    size_t contextual_ray_;
    /// Bob's value for every ray outside the contextual one.
    std::vector<uint8_t> table_;
};

/// Draws one deterministic strategy per round from shared randomness.
class MixtureStrategy final : public Strategy {
   public:
    struct Component {
        ExactProb weight;
        DeterministicStrategy strategy;
    };
    /// Throws std::invalid_argument if the list is empty, the weights do not
    /// sum to 1, or a component is built on a different set.
    explicit MixtureStrategy(std::vector<Component> components);

    std::string name() const override {
        return "mixture";
    }
    AliceAnswer alice_answer(int alice_set, RoundResources &res, Channel &channel) const override;
    BobAnswer bob_answer(const CanonicalVec &bob_vector, RoundResources &res, Channel &channel) const override;
    std::optional<std::vector<AnswerOutcome>> answer_distribution(const Question &q) const override;

    const std::vector<Component> &components() const {
        return components_;
    }

   private:
    size_t draw(const RoundResources &res) const;

    std::vector<Component> components_;
    std::vector<ExactProb> weights_;
};

}  // namespace kstele

#endif
