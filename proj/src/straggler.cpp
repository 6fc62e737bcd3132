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
#include "edgecode/straggler.hpp"

#include <cmath>

#include "edgecode/rng.hpp"

namespace edgecode {

StragglerSample sample_stragglers(const SystemConfig& config, std::uint64_t seed) {
    StragglerSample s;
    s.seed = seed;
    s.lambdas.reserve(config.K);
    SplitMix64 rng(seed);
    for (int k = 0; k < config.K; ++k) s.lambdas.push_back(rng.next_exponential(config.eta));
    return s;
}

int completed_by(double t, double lambda_k, const SystemConfig& config) {
    if (t < lambda_k) return 0;
    // Event times arrive as lambda_k + j*tau recomputed in floating point;
    // the slack keeps exact-boundary queries from rounding down a count.
    double steps = (t - lambda_k) / config.tau + 1e-9;
    int done = static_cast<int>(std::floor(steps));
    int cap = config.rows_per_en();
    if (done < 0) return 0;
    return done > cap ? cap : done;
}

}  // namespace edgecode
