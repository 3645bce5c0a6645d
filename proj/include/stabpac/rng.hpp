// Copyright 2026 The stabpac Authors
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

#ifndef STABPAC_RNG_HPP
#define STABPAC_RNG_HPP

#include <cstdint>
#include <random>

namespace stabpac {

/// Seeded random source with platform-independent draws. The standard
/// distributions are implementation-defined, so bounded integers and reals
/// are derived from the raw 64-bit engine output here.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {
    }

    std::uint64_t next() {
        return engine_();
    }

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
        // Rejection keeps the draw exactly uniform.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t r;
        do {
            r = engine_();
        } while (r >= limit);
        return r % bound;
    }

    bool coin() {
        return engine_() >> 63;
    }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) {
        return uniform01() < p;
    }

   private:
    std::mt19937_64 engine_;
};

/// Mixes (master, a, b) into an independent stream seed (splitmix64 finalizer).
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0) {
    std::uint64_t h = master;
    for (std::uint64_t v : {a, b}) {
        h += 0x9e3779b97f4a7c15ULL + v;
        h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
        h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
        h ^= h >> 31;
    }
    return h;
}

}  // namespace stabpac

#endif
