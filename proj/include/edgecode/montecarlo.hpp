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
#ifndef EDGECODE_MONTECARLO_HPP
#define EDGECODE_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgecode/config.hpp"
#include "edgecode/latency.hpp"

namespace edgecode {

/// Aggregated result of a batch of independent trials.
/// mean_delta equals mean_delta_C + gamma * mean_delta_D exactly.
struct TrialReport {
    long long trials = 0;
    double mean_delta_C = 0.0;
    double mean_delta_D = 0.0;
    double mean_delta = 0.0;
    double ci95_delta = 0.0;  // normal-approximation half width
    std::uint64_t base_seed = 0;
};

/// Runs `trials` independent straggler samples of one scheme. Trial t uses
/// derive_seed(base_seed, t), so reports are reproducible and trials could
/// be evaluated in any order.
TrialReport run_trials(const SystemConfig& config, const SchemeSpec& scheme,
                       long long trials, std::uint64_t base_seed);

/// One sweep-table row. Closed-form rows carry trials = 0 and ci95 = 0.
struct SweepRow {
    double gamma = 0.0;
    std::string scheme;  // "uc", "mc", "mc-exact", "hs"
    std::optional<HybridParams> params;
    double rho1 = 0.0;  // params->coded_rows / m when params is set
    TrialReport report;
};

/// Latency of every scheme across a gamma grid.
///
/// Simulated schemes draw each trial's per-sample (delta_C, delta_D) once
/// and reuse the pair across the whole grid: the same seeds back every
/// gamma, so curves differ only through the gamma weighting (a paired
/// experiment). Coded rows also get an exact closed-form row ("mc-exact"),
/// and the hybrid rows come from re-running the optimizer at each gamma.
std::vector<SweepRow> sweep_gamma(const SystemConfig& config,
                                  const std::vector<Scheme>& schemes,
                                  const std::vector<double>& gamma_grid,
                                  long long trials, std::uint64_t base_seed);

/// Sweep table as CSV with the canonical header
/// gamma,scheme,q,rho1,rho2,trials,seed,mean_delta_C,mean_delta_D,mean_delta,ci95
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace edgecode

#endif
