// Copyright 2026 The jjvar Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef JJVAR_RNG_HPP
#define JJVAR_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace jjvar {

/// splitmix64 finalizer; full-avalanche 64-bit mixing.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based seed derivation: the sub-seed is a pure function of
/// (master, counter, stream), independent of call order. The ensemble uses
/// stream 0/1 for the two interfaces of a sample; parameter sweeps use a
/// separate stream for per-cell master seeds.
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter,
                                           std::uint64_t stream) {
    std::uint64_t h = mix64(master ^ (counter * 0x9E3779B97F4A7C15ULL));
    return mix64(h ^ (stream * 0xD1B54A32D192ED03ULL));
}

/// Standard normal variates from a fixed, portable recipe: mt19937_64 raw
/// output (fully specified by the standard) mapped to [0,1) doubles and fed
/// through the Marsaglia polar transform. Avoids std::normal_distribution,
/// whose algorithm is implementation-defined.
class NormalSource {
  public:
    explicit NormalSource(std::uint64_t seed) : gen_(seed) {}

    double uniform() { // in [0,1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

  private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace jjvar

#endif // JJVAR_RNG_HPP
