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

#include <gtest/gtest.h>

#include "kstele/random.h"

using namespace kstele;

TEST(vec4, rejects_zero_and_out_of_bound) {
    ASSERT_THROW(IntVec4(0, 0, 0, 0), std::invalid_argument);
    ASSERT_THROW(IntVec4(9, 0, 0, 0), std::invalid_argument);
    ASSERT_THROW(IntVec4(0, -9, 0, 0), std::invalid_argument);
    ASSERT_NO_THROW(IntVec4(8, -8, 0, 1));
}

TEST(vec4, canonicalize_examples) {
    ASSERT_EQ(canonicalize(IntVec4(0, 0, 0, 1)).vec(), IntVec4(0, 0, 0, 1));
    ASSERT_EQ(canonicalize(IntVec4(-1, 1, 1, 1)).vec(), IntVec4(1, -1, -1, -1));
    ASSERT_EQ(canonicalize(IntVec4(0, 0, -2, 0)).vec(), IntVec4(0, 0, 1, 0));
    ASSERT_EQ(canonicalize(IntVec4(0, 4, -6, 2)).vec(), IntVec4(0, 2, -3, 1));
}

TEST(vec4, dot_examples) {
    ASSERT_EQ(dot(IntVec4(0, 0, 0, 1), IntVec4(0, 0, 1, 0)), 0);
    ASSERT_EQ(dot(IntVec4(1, -1, 1, -1), IntVec4(1, -1, -1, 1)), 0);
    ASSERT_EQ(dot(IntVec4(1, 1, 1, 1), IntVec4(1, 1, 0, 0)), 2);
    ASSERT_EQ(IntVec4(1, -2, 3, 0).norm2(), 14);
}

TEST(vec4, str) {
    ASSERT_EQ(IntVec4(1, -1, 0, 8).str(), "(1,-1,0,8)");
}

TEST(vec4, canonicalize_scale_invariant_and_idempotent) {
    RandomSource rng(12345);
    for (int trial = 0; trial < 5000; trial++) {
        std::array<int, 4> c{};
        bool nonzero = false;
        for (int &x : c) {
            x = static_cast<int>(rng.uniform_below(9)) - 4;
            nonzero |= x != 0;
        }
        if (!nonzero) {
            continue;
        }
        IntVec4 v(c);
        CanonicalVec cv = canonicalize(v);
        ASSERT_EQ(canonicalize(cv.vec()), cv);
        for (int scale : {-2, -1, 2}) {
            std::array<int, 4> scaled = c;
            for (int &x : scaled) {
                x *= scale;
            }
            ASSERT_EQ(canonicalize(IntVec4(scaled)), cv) << v << " * " << scale;
        }
        // First nonzero coordinate is positive, and rays differ from their negation only by sign.
        for (int x : cv.coords()) {
            if (x != 0) {
                ASSERT_GT(x, 0);
                break;
            }
        }
    }
}

TEST(vec4, distinct_rays_have_distinct_canonical_forms) {
    ASSERT_NE(canonicalize(IntVec4(1, 1, 0, 0)), canonicalize(IntVec4(1, -1, 0, 0)));
    ASSERT_NE(canonicalize(IntVec4(1, 2, 0, 0)), canonicalize(IntVec4(2, 1, 0, 0)));
}
