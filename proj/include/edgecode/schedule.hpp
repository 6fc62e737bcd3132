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
#ifndef EDGECODE_SCHEDULE_HPP
#define EDGECODE_SCHEDULE_HPP

#include <string>
#include <vector>

#include "edgecode/config.hpp"

namespace edgecode {

/// What a schedule's row identifiers index into.
enum class RowDomain {
    kModelRows,  // the m uncoded model rows
    kCodedRows,  // rows of a coded expansion of the model
};

/// Per-node ordered computation lists. Entry j of node k's list is the
/// 0-based identifier of the row whose inner products that node computes
/// in position j+1. Entries within one node are distinct and each list
/// has length m*mu.
struct Schedule {
    RowDomain domain = RowDomain::kModelRows;
    std::vector<std::vector<int>> per_en;

    /// Compact JSON: array of per-node arrays of 1-based row indices.
    std::string to_json() const;
};

/// Hybrid layout parameters: an (coded_rows, m) erasure code whose rows are
/// replicated to rho2 nodes each, with the system waiting for the fastest
/// q nodes to finish everything they store.
struct HybridParams {
    int q = 0;           // nodes awaited before downlink starts
    int coded_rows = 0;  // code length, rho1 = coded_rows / m >= 1
    int rho2 = 0;        // replication factor per coded row

    double rho1(const SystemConfig& config) const {
        return static_cast<double>(coded_rows) / config.m;
    }
};

/// One violated hybrid-parameter constraint.
struct HybridViolation {
    enum Kind {
        kStorage,        // rho1*rho2 exceeds K*mu
        kCoverage,       // q finishers may hold fewer than m distinct rows
        kDivisibility,   // coded_rows not divisible by C(K, rho2)
        kRange,          // q or rho2 or coded_rows outside its range
    };
    Kind kind;
    std::string message;
};

/// Constraint check for hybrid parameters. Returns every violation rather
/// than stopping at the first; an empty list means the parameters are usable.
std::vector<HybridViolation> validate_hybrid(const SystemConfig& config,
                                             const HybridParams& params);

inline bool hybrid_ok(const SystemConfig& config, const HybridParams& params) {
    return validate_hybrid(config, params).empty();
}

/// Uncoded cyclic schedule over the m model rows.
///
/// Slots are dealt position-major (position 1 of every node, then position
/// 2, ...) from the cyclic row sequence 1..m, skipping rows a node already
/// holds and rows that reached their copy budget. Budgets are floor(K*mu)
/// per row with the remainder going to the highest-numbered rows, so every
/// row's multiplicity is within one of K*mu and node k's list starts at
/// row k.
Schedule cyclic_schedule(const SystemConfig& config);

/// Coded storage: node k holds coded rows (k-1)*m*mu .. k*m*mu - 1 of a
/// (K*mu*m, m) erasure code, computed in ascending index order.
Schedule mds_placement(const SystemConfig& config);

/// Hybrid storage: the coded_rows coded rows split into C(K, rho2) groups
/// of b rows; the group of each rho2-subset of nodes is stored at exactly
/// those nodes. Per-node order: groups by lexicographic subset, ascending
/// row index within a group. Each node ends up with rho1*rho2*m/K rows.
Schedule hybrid_placement(const SystemConfig& config, const HybridParams& params);

/// Exact binomial coefficient as a 64-bit count (small arguments only).
long long binomial(int n, int k);

}  // namespace edgecode

#endif
