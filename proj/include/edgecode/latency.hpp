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
#ifndef EDGECODE_LATENCY_HPP
#define EDGECODE_LATENCY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edgecode/config.hpp"
#include "edgecode/schedule.hpp"
#include "edgecode/straggler.hpp"

namespace edgecode {

/// How often each distinct computed value exists across nodes:
/// counts[r] = number of distinct values computed at exactly r nodes.
struct RedundancyProfile {
    std::map<int, long long> counts;

    long long distinct_values() const;
    long long total_computations() const;  // sum of r * counts[r]
};

/// Normalized latency of one evaluated scheme instance.
/// delta = delta_C + gamma * delta_D always holds exactly.
struct LatencyBreakdown {
    double delta_C = 0.0;  // compute time over tau
    double delta_D = 0.0;  // downlink time over the per-value broadcast time
    double delta = 0.0;
};

/// Stopping state of the uncoded scheme on one straggler sample.
struct UcStop {
    double stop_time = 0.0;        // seconds
    std::vector<int> stop_vector;  // values computed per node at stop_time
};

/// Broadcast cost of one value replicated at r nodes: joint precoding
/// serves min(r, N) users per slot, so the normalized cost is 1/min(r, N).
/// r must be >= 1 (the value exists somewhere).
double zf_slot_cost(int r, int users);

/// Earliest time at which the union of schedule prefixes covers all m rows,
/// found by binary search over the sorted event grid {lambda_k + j*tau}
/// (coverage is monotone in t). Throws InfeasibleError if even the full
/// schedule does not cover every row.
UcStop uc_stop(const SystemConfig& config, const Schedule& schedule,
               const StragglerSample& sample);

/// Redundancy profile realized by a stop vector: row i counts one copy for
/// every node whose first stop_vector[k] entries include it.
RedundancyProfile uc_redundancy(const SystemConfig& config, const Schedule& schedule,
                                const std::vector<int>& stop_vector);

/// Per-sample uncoded latency: delta_C = stop_time/tau, delta_D = sum over
/// rows of 1/min(r_i, N).
LatencyBreakdown uc_latency(const SystemConfig& config, const Schedule& schedule,
                            const StragglerSample& sample);

/// Per-sample coded latency: wait for the fastest ceil(1/mu) nodes to finish
/// their m*mu rows; the m distinct values then go out sequentially.
LatencyBreakdown mc_latency_sample(const SystemConfig& config,
                                   const StragglerSample& sample);

/// Expected coded latency in closed form:
/// (H_K - H_{K-ceil(1/mu)})/(eta*tau) + m*mu + gamma*m.
LatencyBreakdown mc_latency_closed(const SystemConfig& config);

/// Redundancy profile of the hybrid layout once any q nodes have finished:
/// counts[r] = C(q,r)*C(K-q,rho2-r)*b for r in [r_min, r_max]. Depends only
/// on q, never on which nodes were fastest.
RedundancyProfile hs_profile(const SystemConfig& config, const HybridParams& params);

/// Downlink cost of delivering m distinct values from a redundancy profile,
/// sending in descending redundancy order: full levels r_q..r_max plus the
/// remainder at level r_q - 1, each slot serving min(r, N) users. Throws
/// InfeasibleError if the profile holds fewer than m distinct values.
double hs_downlink(const SystemConfig& config, const RedundancyProfile& profile);

/// Per-sample hybrid latency: stop at the q-th smallest setup time plus the
/// time to compute the rho1*rho2*m/K stored rows.
LatencyBreakdown hs_latency_sample(const SystemConfig& config, const HybridParams& params,
                                   const StragglerSample& sample);

/// Expected hybrid latency in closed form:
/// (H_K - H_{K-q})/(eta*tau) + rho1*rho2*m/K + gamma*hs_downlink.
LatencyBreakdown hs_latency_closed(const SystemConfig& config, const HybridParams& params);

/// Rows each node actually stores under the hybrid layout, rho1*rho2*m/K.
/// At most m*mu; strictly fewer when the storage constraint is slack.
int hs_rows_per_en(const SystemConfig& config, const HybridParams& params);

/// Smallest redundancy level whose profile tail fits within the m values
/// that must be delivered.
int hs_send_threshold(const SystemConfig& config, const RedundancyProfile& profile);

/// Which scheme a latency row belongs to.
enum class Scheme { kUncoded, kCoded, kHybrid };

const char* scheme_name(Scheme s);

/// Scheme selector plus hybrid parameters when applicable.
struct SchemeSpec {
    Scheme scheme = Scheme::kUncoded;
    HybridParams hybrid;  // used only when scheme == kHybrid
};

/// One CSV line "scheme,q,rho1,rho2,seed,delta_C,delta_D,delta" for a
/// per-sample latency record. Parameter fields are empty for uc and mc.
std::string latency_csv_row(const SystemConfig& config, const SchemeSpec& spec,
                            std::uint64_t seed, const LatencyBreakdown& bd);

}  // namespace edgecode

#endif
