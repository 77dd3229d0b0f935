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

#include "kstele/random.h"

#include <stdexcept>

namespace kstele {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

uint64_t derive_seed(uint64_t seed, uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL + 1));
}

uint64_t RandomSource::uniform_below(uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_below(0)");
    }
    // 2^64 mod n; rejecting draws below it leaves a multiple of n values.
    uint64_t threshold = (0 - n) % n;
    while (true) {
        uint64_t x = engine_();
        if (x >= threshold) {
            return x % n;
        }
    }
}

double RandomSource::uniform_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace kstele
