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
#ifndef EDGECODE_STRAGGLER_HPP
#define EDGECODE_STRAGGLER_HPP

#include <cstdint>
#include <vector>

#include "edgecode/config.hpp"

namespace edgecode {

/// One realization of the per-node random setup times, in seconds.
struct StragglerSample {
    std::vector<double> lambdas;  // length K, all >= 0
    std::uint64_t seed = 0;       // seed that regenerates this sample
};

/// K independent exponential(eta) setup times, deterministic per seed.
StragglerSample sample_stragglers(const SystemConfig& config, std::uint64_t seed);

/// Number of values a node with setup time lambda_k has finished by time t:
/// clamp(floor((t - lambda_k)/tau), 0, m*mu). Nondecreasing in t; changes
/// only at the event times lambda_k + j*tau.
int completed_by(double t, double lambda_k, const SystemConfig& config);

}  // namespace edgecode

#endif
