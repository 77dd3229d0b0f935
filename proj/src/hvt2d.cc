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

#include "kstele/hvt2d.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "kstele/random.h"

namespace kstele::hvt2d {

UnitVec3::UnitVec3(double x, double y, double z) : x_(x), y_(y), z_(z) {
    double n2 = x * x + y * y + z * z;
    if (!(std::abs(n2 - 1.0) <= UNIT_TOLERANCE)) {
        throw std::invalid_argument("Not a unit vector (squared norm " + std::to_string(n2) + ").");
    }
}

UnitVec3 UnitVec3::normalized(double x, double y, double z) {
    double n = std::sqrt(x * x + y * y + z * z);
    if (!(n > 0)) {
        throw std::invalid_argument("Cannot normalize the zero vector.");
    }
    return UnitVec3(x / n, y / n, z / n);
}

double cosine(const UnitVec3 &n, const UnitVec3 &m) {
    return std::clamp(n.x() * m.x() + n.y() * m.y() + n.z() * m.z(), -1.0, 1.0);
}

HiddenVar::HiddenVar(double lambda) : lambda_(lambda) {
    if (!(lambda >= -0.5 && lambda <= 0.5)) {
        throw std::invalid_argument("Hidden variable " + std::to_string(lambda) + " is outside [-1/2, 1/2].");
    }
}

double born_prob(const UnitVec3 &n, const UnitVec3 &m) {
    return 0.5 * (1.0 + cosine(n, m));
}

namespace {

double sign(double x) {
    return x >= 0 ? 1.0 : -1.0;
}

int value_at(double c, double lambda) {
    return static_cast<int>(0.5 * (1.0 + sign(lambda + 0.5 * std::abs(c) * sign(c))));
}

}  // namespace

int hvt_value(const UnitVec3 &n, const UnitVec3 &m, HiddenVar h) {
    return value_at(cosine(n, m), h.lambda());
}

double hvt_prob_analytic(const UnitVec3 &n, const UnitVec3 &m) {
    double lo = std::max(-0.5, -0.5 * cosine(n, m));
    return std::max(0.0, 0.5 - lo);
}

McEstimate hvt_prob_mc(const UnitVec3 &n, const UnitVec3 &m, uint64_t samples, uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("Need at least one sample.");
    }
    double c = cosine(n, m);
    RandomSource rng(seed);
    uint64_t ones = 0;
    for (uint64_t k = 0; k < samples; k++) {
        ones += value_at(c, rng.uniform_unit() - 0.5);
    }
    double p = static_cast<double>(ones) / static_cast<double>(samples);
    return McEstimate{p, std::sqrt(p * (1.0 - p) / static_cast<double>(samples))};
}

std::vector<GridPair> verification_grid(size_t count) {
    if (count < 3) {
        throw std::invalid_argument("The verification grid needs at least 3 pairs.");
    }
    std::vector<GridPair> grid;
    grid.reserve(count);
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (size_t k = 0; k < count; k++) {
        // Fibonacci-sphere direction for n.
        double z = 1.0 - 2.0 * (static_cast<double>(k) + 0.5) / static_cast<double>(count);
        double r = std::sqrt(1.0 - z * z);
        double phi = golden * static_cast<double>(k);
        UnitVec3 n = UnitVec3::normalized(r * std::cos(phi), r * std::sin(phi), z);

        // Unit w orthogonal to n, via Gram-Schmidt against the least aligned axis.
        double ax = std::abs(n.x()), ay = std::abs(n.y()), az = std::abs(n.z());
        double ex = 0, ey = 0, ez = 0;
        if (ax <= ay && ax <= az) {
            ex = 1;
        } else if (ay <= az) {
            ey = 1;
        } else {
            ez = 1;
        }
        double d = ex * n.x() + ey * n.y() + ez * n.z();
        UnitVec3 w = UnitVec3::normalized(ex - d * n.x(), ey - d * n.y(), ez - d * n.z());

        double target = -1.0 + 2.0 * static_cast<double>(k) / static_cast<double>(count - 1);
        if (2 * k + 1 == count) {
            target = 0.0;
        }
        // Endpoints use axis directions so that n.m is exactly -1 and 1.
        if (k == 0) {
            grid.push_back(GridPair{UnitVec3(0, 0, 1), UnitVec3(0, 0, -1)});
        } else if (k + 1 == count) {
            grid.push_back(GridPair{UnitVec3(1, 0, 0), UnitVec3(1, 0, 0)});
        } else {
            double s = std::sqrt(1.0 - target * target);
            grid.push_back(GridPair{
                n, UnitVec3::normalized(
                       target * n.x() + s * w.x(), target * n.y() + s * w.y(), target * n.z() + s * w.z())});
        }
    }
    return grid;
}

std::vector<GridRow> verification_table(size_t count, uint64_t samples, uint64_t seed) {
    std::vector<GridRow> rows;
    auto grid = verification_grid(count);
    for (size_t k = 0; k < grid.size(); k++) {
        const auto &[n, m] = grid[k];
        McEstimate mc = hvt_prob_mc(n, m, samples, derive_seed(seed, k));
        rows.push_back(GridRow{cosine(n, m), hvt_prob_analytic(n, m), born_prob(n, m), mc.estimate, mc.std_error});
    }
    return rows;
}

}  // namespace kstele::hvt2d
