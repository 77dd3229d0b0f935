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

#ifndef KSTELE_COLORING_H
#define KSTELE_COLORING_H

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kstele/ks_set.h"

namespace kstele {

/// Largest number of distinct rays `search_noncontextual` accepts (2^24 raw assignments).
constexpr size_t MAX_SEARCH_RAYS = 24;
/// Largest number of bases `min_contextuality` accepts (4^12 slot choices).
constexpr size_t MAX_CONTEXT_BASES = 12;

/// Raised when an exhaustive search would exceed its enumeration cap.
class SearchTooLarge : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A non-contextual 0/1 valuation: one bit per distinct ray, indexed by the
/// target set's ray ids.
struct NcAssignment {
    std::vector<uint8_t> values;

    uint8_t value(const KsSet &set, const CanonicalVec &v) const {
        return values.at(set.ray_id(v));
    }
    bool operator==(const NcAssignment &other) const = default;
};

/// True iff every basis has exactly one vector valued 1.
/// Throws std::invalid_argument if the assignment's domain does not match.
bool satisfies(const NcAssignment &a, const KsSet &set);

/// Every satisfying NcAssignment, in lexicographic order of the value vector.
///
/// Depth-first over rays in `KsSet::rays()` order, trying 0 before 1. A
/// branch dies as soon as some basis holds two 1s or has been completed with
/// no 1 at all. Throws SearchTooLarge beyond MAX_SEARCH_RAYS rays.
std::vector<NcAssignment> search_noncontextual(const KsSet &set);

/// Witness that no NcAssignment exists: summing the per-basis "exactly one 1"
/// constraints gives an odd right-hand side while every ray contributes an
/// even multiple of its value on the left.
struct ParityCertificate {
    size_t basis_count;
    std::vector<std::pair<CanonicalVec, size_t>> occurrence_counts;
};

/// Some iff the basis count is odd and every ray occurs an even number of
/// times. None does not imply that the set is colorable.
std::optional<ParityCertificate> parity_certificate(const KsSet &set);

/// A contextual valuation: each basis marks exactly one slot with 1, chosen
/// independently per basis, so a ray may receive different values in
/// different bases.
struct CtxAssignment {
    /// Marked slot (1..4) for each basis, in basis order.
    std::vector<int> choices;

    uint8_t value(Occurrence occ) const {
        return choices.at(occ.basis - 1) == occ.slot ? 1 : 0;
    }
    bool operator==(const CtxAssignment &other) const = default;
};

/// Ray ids whose occurrences disagree under `a`.
std::vector<size_t> mismatched_rays(const KsSet &set, const CtxAssignment &a);

struct ContextualityResult {
    size_t defect;
    CtxAssignment witness;
    std::vector<CanonicalVec> mismatched;
};

/// Minimum number of rays that must take different values in different
/// bases, over all 4^B slot-choice tuples. The witness is the
/// lexicographically smallest tuple attaining the minimum.
///
/// Requires every ray to occur once or twice (std::invalid_argument
/// otherwise); throws SearchTooLarge beyond MAX_CONTEXT_BASES bases.
ContextualityResult min_contextuality(const KsSet &set);

/// As `min_contextuality`, restricted to tuples accepted by `accept`. Returns
/// none when no tuple is accepted.
std::optional<ContextualityResult> min_contextuality_where(
    const KsSet &set, const std::function<bool(const CtxAssignment &)> &accept);

}  // namespace kstele

#endif
