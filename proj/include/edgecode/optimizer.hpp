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
#ifndef EDGECODE_OPTIMIZER_HPP
#define EDGECODE_OPTIMIZER_HPP

#include <optional>
#include <string>
#include <vector>

#include "edgecode/config.hpp"
#include "edgecode/latency.hpp"
#include "edgecode/schedule.hpp"

namespace edgecode {

/// One evaluated hybrid candidate.
struct HybridCandidate {
    HybridParams params;
    double rho1 = 0.0;     // coded_rows / m
    long long b = 0;       // rows per storage group
    int r_min = 0;
    int r_max = 0;
    int send_threshold = 0;  // r_q of the delivery schedule
    int rows_per_en = 0;     // rows actually stored per node
    int storage_cap = 0;     // m*mu storage budget for comparison
    bool on_coarse_grid = false;  // rho1 lies on the 1/q-step grid
    LatencyBreakdown expected;
};

/// Result of the exhaustive hybrid search.
struct Optimum {
    HybridCandidate best;
    std::vector<HybridCandidate> table;  // every candidate, enumeration order
};

/// All (q, coded_rows, rho2) triples passing validate_hybrid, in
/// deterministic order: q ascending, then rho2, then coded_rows. The
/// coded_rows sweep walks multiples of C(K, rho2) so group sizes stay
/// integral. May be empty for tiny systems.
std::vector<HybridParams> enumerate_candidates(const SystemConfig& config);

/// Exhaustive search minimizing the closed-form expected latency at the
/// config's gamma. Ties break toward smaller q, then rho2, then coded_rows.
/// nullopt when no candidate exists.
std::optional<Optimum> optimize(const SystemConfig& config);

/// Candidate table as CSV. Columns:
/// q,rho1,rho2,b,r_min,r_max,r_q,delta_C,delta_D,delta,rows_per_en,storage_cap,on_coarse_grid
std::string candidates_csv(const std::vector<HybridCandidate>& table);

}  // namespace edgecode

#endif
