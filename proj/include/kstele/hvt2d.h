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

#ifndef KSTELE_HVT2D_H
#define KSTELE_HVT2D_H

#include <cstdint>
#include <vector>

namespace kstele::hvt2d {

constexpr double UNIT_TOLERANCE = 1e-12;

/// A Bloch-sphere direction. Construction throws std::invalid_argument
/// unless |x^2 + y^2 + z^2 - 1| <= UNIT_TOLERANCE.
class UnitVec3 {
   public:
    UnitVec3(double x, double y, double z);
    /// Scales a nonzero vector to unit length.
    static UnitVec3 normalized(double x, double y, double z);

    double x() const {
        return x_;
    }
    double y() const {
        return y_;
    }
    double z() const {
        return z_;
    }
    UnitVec3 operator-() const {
        return UnitVec3(-x_, -y_, -z_);
    }

   private:
    double x_, y_, z_;
};

/// n.m clamped to [-1, 1].
double cosine(const UnitVec3 &n, const UnitVec3 &m);

/// Hidden variable, uniform on [-1/2, 1/2]. Throws std::invalid_argument out of range.
class HiddenVar {
   public:
    explicit HiddenVar(double lambda);
    double lambda() const {
        return lambda_;
    }

   private:
    double lambda_;
};

/// Quantum probability that the projector (I + m.sigma)/2 reads 1 in the
/// state (I + n.sigma)/2: (1 + n.m)/2.
double born_prob(const UnitVec3 &n, const UnitVec3 &m);

/// Value (0 or 1) the completed state (n, lambda) assigns to the projector
/// along m: (1 + Sign(lambda + |n.m| Sign(n.m) / 2)) / 2, with Sign(0) = +1.
int hvt_value(const UnitVec3 &n, const UnitVec3 &m, HiddenVar h);

/// Uniform measure of {lambda : hvt_value = 1}, i.e. the length of
/// [-1/2, 1/2] intersected with [-(n.m)/2, 1/2].
double hvt_prob_analytic(const UnitVec3 &n, const UnitVec3 &m);

struct McEstimate {
    double estimate;
    double std_error;
};

/// Averages hvt_value over `samples` uniform draws of lambda. Throws
/// std::invalid_argument if samples == 0.
McEstimate hvt_prob_mc(const UnitVec3 &n, const UnitVec3 &m, uint64_t samples, uint64_t seed);

struct GridPair {
    UnitVec3 n;
    UnitVec3 m;
};

/// `count` (>= 3) direction pairs whose cosines step evenly from -1 to 1,
/// hitting -1, 0 (for odd count) and 1 exactly. The directions of n vary over
/// the sphere so the grid is not confined to one plane.
std::vector<GridPair> verification_grid(size_t count);

struct GridRow {
    double cosine;
    double analytic;
    double born;
    double mc_estimate;
    double std_error;
};

std::vector<GridRow> verification_table(size_t count, uint64_t samples, uint64_t seed);

}  // namespace kstele::hvt2d

#endif
