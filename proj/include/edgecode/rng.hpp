/*
 * Copyright 2026 the edgecode authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef EDGECODE_RNG_HPP
#define EDGECODE_RNG_HPP

#include <cmath>
#include <cstdint>

namespace edgecode {

// SplitMix64. Chosen over std::mt19937 plus std::exponential_distribution
// because the standard distributions are implementation-defined: the same
// seed must reproduce the same draws on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Exponential with rate `rate` via inverse CDF. -log1p(-u) maps
    /// u in [0,1) to [0, inf) without ever taking log(0).
    double next_exponential(double rate) {
        return -std::log1p(-next_unit()) / rate;
    }

private:
    std::uint64_t state_;
};

/// Per-trial stream seed: the trial-th output of the SplitMix64 sequence
/// rooted at base_seed. Distinct trials of one base seed never collide.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t trial) {
    std::uint64_t z = base_seed + (trial + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace edgecode

#endif
