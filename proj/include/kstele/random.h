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

#ifndef KSTELE_RANDOM_H
#define KSTELE_RANDOM_H

#include <cstdint>
#include <random>

namespace kstele {

/// Mixes a master seed with a stream index into an independent seed.
/// Pure function (splitmix64 finalizer applied twice).
uint64_t derive_seed(uint64_t seed, uint64_t stream);

/// Seeded deterministic random source.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the standard,
/// and deliberately avoids the std distributions (their algorithms are
/// implementation defined), so draws are identical on every platform.
class RandomSource {
   public:
    explicit RandomSource(uint64_t seed) : engine_(seed) {
    }

    uint64_t next_u64() {
        return engine_();
    }
    /// Uniform integer in [0, n). Requires n > 0.
    uint64_t uniform_below(uint64_t n);
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform_unit();

   private:
    std::mt19937_64 engine_;
};

}  // namespace kstele

#endif
