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

#include "kstele/vec4.h"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kstele {

namespace {

void check_coords(const std::array<int, 4> &coords) {
    bool any_nonzero = false;
    for (int c : coords) {
        if (std::abs(c) > MAX_COORD) {
            throw std::invalid_argument(
                "Vector coordinate " + std::to_string(c) + " exceeds the bound of +-" + std::to_string(MAX_COORD) + ".");
        }
        any_nonzero |= c != 0;
    }
    if (!any_nonzero) {
        throw std::invalid_argument("The all-zero vector is not a ray.");
    }
}

}  // namespace

IntVec4::IntVec4(int a, int b, int c, int d) : IntVec4(std::array<int, 4>{a, b, c, d}) {
}

IntVec4::IntVec4(const std::array<int, 4> &coords) : coords_(coords) {
    check_coords(coords_);
}

int IntVec4::norm2() const {
    return static_cast<int>(dot(*this, *this));
}

std::string IntVec4::str() const {
    std::stringstream ss;
    ss << *this;
    return ss.str();
}

CanonicalVec canonicalize(const IntVec4 &v) {
    int g = 0;
    for (int c : v.coords()) {
        g = std::gcd(g, c);
    }
    std::array<int, 4> out = v.coords();
    int sign = 0;
    for (int c : out) {
        if (c != 0) {
            sign = c > 0 ? 1 : -1;
            break;
        }
    }
    for (int &c : out) {
        c = c / g * sign;
    }
    return CanonicalVec(IntVec4(out));
}

int64_t dot(const IntVec4 &u, const IntVec4 &v) {
    int64_t total = 0;
    for (size_t k = 0; k < 4; k++) {
        total += static_cast<int64_t>(u[k]) * v[k];
    }
    return total;
}

std::ostream &operator<<(std::ostream &out, const IntVec4 &v) {
    out << '(' << v[0] << ',' << v[1] << ',' << v[2] << ',' << v[3] << ')';
    return out;
}

std::ostream &operator<<(std::ostream &out, const CanonicalVec &v) {
    return out << v.vec();
}

}  // namespace kstele
