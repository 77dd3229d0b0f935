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

#ifndef KSTELE_KS_SET_H
#define KSTELE_KS_SET_H

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "kstele/vec4.h"

namespace kstele {

constexpr size_t MAX_BASES = 64;

/// Position of a vector inside a KsSet. Both indices are 1-based, matching
/// the S^1..S^9 / slot 1..4 numbering used everywhere in the game.
struct Occurrence {
    int basis;
    int slot;

    bool operator==(const Occurrence &other) const = default;
    auto operator<=>(const Occurrence &other) const = default;
};

std::ostream &operator<<(std::ostream &out, const Occurrence &occ);

/// Four vectors claimed to be an orthogonal basis of R^4.
///
/// Orthogonality is not enforced on construction, so that malformed custom
/// sets can still be loaded and reported on by `validate_ks_set`.
struct Basis {
    std::array<IntVec4, 4> vectors;

    bool is_orthogonal() const;
    bool operator==(const Basis &other) const = default;
};

/// An ordered list of bases together with the index from each distinct ray to
/// the places it occurs.
class KsSet {
   public:
    /// Throws std::invalid_argument unless 1 <= bases.size() <= MAX_BASES.
    explicit KsSet(std::vector<Basis> bases);

    const std::vector<Basis> &bases() const {
        return bases_;
    }
    size_t num_bases() const {
        return bases_.size();
    }
    /// 1-based basis lookup.
    const Basis &basis(int index) const;
    const IntVec4 &vector_at(Occurrence occ) const;

    /// Distinct rays in order of first appearance (basis-major, slot-minor).
    const std::vector<CanonicalVec> &rays() const {
        return rays_;
    }
    size_t num_rays() const {
        return rays_.size();
    }
    std::optional<size_t> find_ray(const CanonicalVec &v) const;
    /// Throws std::out_of_range if the ray is not part of the set.
    size_t ray_id(const CanonicalVec &v) const;
    /// Ray id of the vector at a (1-based) basis and slot.
    size_t ray_at(int basis, int slot) const;

    const std::vector<Occurrence> &occurrences(size_t ray_id) const {
        return occurrences_[ray_id];
    }
    const std::vector<Occurrence> &occurrences(const CanonicalVec &v) const {
        return occurrences_[ray_id(v)];
    }

    /// Sub-collection keeping only the listed bases (1-based), in the order given.
    KsSet restricted(const std::vector<int> &basis_indices) const;
    KsSet without_basis(int index) const;

    bool operator==(const KsSet &other) const {
        return bases_ == other.bases_;
    }

   private:
    std::vector<Basis> bases_;
    std::vector<CanonicalVec> rays_;
    std::map<CanonicalVec, size_t> ray_ids_;
    std::vector<std::vector<Occurrence>> occurrences_;
    std::vector<std::array<size_t, 4>> slot_rays_;
};

/// The 18-vector, 9-basis set in dimension 4, with bases and slots in their
/// customary printed order.
const KsSet &cabello_set();

/// A single basis {e1, e2, e3, e4}.
KsSet standard_basis_set();

struct PairViolation {
    int slot_a;
    int slot_b;
    int64_t dot;

    bool operator==(const PairViolation &other) const = default;
};

struct BasisCheck {
    int basis;
    bool orthogonal;
    std::vector<PairViolation> violations;
};

struct ValidationReport {
    std::vector<BasisCheck> bases;
    size_t distinct_vectors = 0;
    /// Occurrence count per distinct ray, in KsSet::rays() order.
    std::vector<std::pair<CanonicalVec, size_t>> occurrence_counts;

    bool all_orthogonal() const;
    /// True when every ray occurs the same number of times `n`.
    bool all_occurrences_equal(size_t n) const;
    bool ok() const {
        return all_orthogonal();
    }
};

ValidationReport validate_ks_set(const KsSet &set);

/// Error raised while reading the text vector-set format. Line and column are
/// 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, size_t column, const std::string &message);
    size_t line() const {
        return line_;
    }
    size_t column() const {
        return column_;
    }

   private:
    size_t line_;
    size_t column_;
};

/// Parses the text format: one basis per line, four "(a,b,c,d)" vectors per
/// line separated by whitespace; blank lines and lines starting with '#' are
/// skipped.
KsSet parse_ks_set(std::string_view text);
KsSet load_ks_set(const std::string &path);
std::string format_ks_set(const KsSet &set);

}  // namespace kstele

#endif
