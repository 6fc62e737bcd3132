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
#ifndef EDGECODE_CONFIG_HPP
#define EDGECODE_CONFIG_HPP

#include <string>
#include <vector>

namespace edgecode {

/// Global system parameters.
///
/// K edge nodes serve N users. The model matrix has m rows; every node
/// stores a fraction mu of them (m*mu must be an integer). Each inner
/// product takes tau seconds once a node's random setup time (exponential
/// with rate eta) has elapsed. gamma weighs downlink time against compute
/// time in the total latency, and L is the symbol width in bits used by
/// finite-field verification.
struct SystemConfig {
    int K = 6;
    int N = 6;
    int m = 60;
    double mu = 0.5;
    double tau = 0.005;
    double eta = 0.8;
    double gamma = 0.0;
    int L = 8;

    /// Rows stored per node, m*mu as an exact integer.
    int rows_per_en() const;

    /// Smallest number of complete nodes whose storage spans all m rows:
    /// the ceiling of 1/mu, computed robustly against values like mu=1/3
    /// that are not representable exactly.
    int min_wait() const;

    /// floor(K*mu), robust to representation error.
    int floor_k_mu() const;

    /// All violated invariants, empty when the configuration is usable.
    std::vector<std::string> validate() const;

    /// Throws ConfigError listing every problem unless validate() is clean.
    void ensure_valid() const;
};

}  // namespace edgecode

#endif
