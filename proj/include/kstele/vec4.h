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

#ifndef KSTELE_VEC4_H
#define KSTELE_VEC4_H

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>

namespace kstele {

/// Largest absolute coordinate accepted in an IntVec4.
constexpr int MAX_COORD = 8;

/// A ray in real 4-space with small integer coordinates.
///
/// The coordinates are stored exactly as given (no normalization); use
/// `canonicalize` to obtain a representative suitable for identity tests.
class IntVec4 {
   public:
    /// Throws std::invalid_argument if all coordinates are zero or any
    /// coordinate exceeds MAX_COORD in absolute value.
    IntVec4(int a, int b, int c, int d);
    explicit IntVec4(const std::array<int, 4> &coords);

    const std::array<int, 4> &coords() const {
        return coords_;
    }
    int operator[](size_t k) const {
        return coords_[k];
    }
    int norm2() const;
    std::string str() const;

    bool operator==(const IntVec4 &other) const = default;
    auto operator<=>(const IntVec4 &other) const = default;

   private:
    std::array<int, 4> coords_;
};

/// Canonical representative of a ray: coordinates divided by their gcd and
/// the first nonzero coordinate positive. Equal iff the rays are equal.
class CanonicalVec {
   public:
    const IntVec4 &vec() const {
        return vec_;
    }
    const std::array<int, 4> &coords() const {
        return vec_.coords();
    }
    std::string str() const {
        return vec_.str();
    }

    bool operator==(const CanonicalVec &other) const = default;
    auto operator<=>(const CanonicalVec &other) const = default;

   private:
    explicit CanonicalVec(IntVec4 v) : vec_(v) {
    }
    friend CanonicalVec canonicalize(const IntVec4 &v);
    IntVec4 vec_;
};

CanonicalVec canonicalize(const IntVec4 &v);

/// Exact integer inner product.
int64_t dot(const IntVec4 &u, const IntVec4 &v);

std::ostream &operator<<(std::ostream &out, const IntVec4 &v);
std::ostream &operator<<(std::ostream &out, const CanonicalVec &v);

}  // namespace kstele

template <>
struct std::hash<kstele::CanonicalVec> {
    size_t operator()(const kstele::CanonicalVec &v) const noexcept {
        size_t h = 0;
        for (int c : v.coords()) {
            h = h * 31 + static_cast<size_t>(c + 64);
        }
        return h;
    }
};

#endif
