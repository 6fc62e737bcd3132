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
#include "edgecode/schedule.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <vector>

#include "edgecode/errors.hpp"

namespace edgecode {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: r*(n-k+i) is divisible by i here
    }
    return r;
}

std::string Schedule::to_json() const {
    std::string s = "[";
    for (std::size_t k = 0; k < per_en.size(); ++k) {
        if (k) s += ",";
        s += "[";
        for (std::size_t i = 0; i < per_en[k].size(); ++i) {
            if (i) s += ",";
            s += std::to_string(per_en[k][i] + 1);  // 1-based on the wire
        }
        s += "]";
    }
    s += "]";
    return s;
}

Schedule cyclic_schedule(const SystemConfig& config) {
    const int K = config.K;
    const int m = config.m;
    const int per_node = config.rows_per_en();
    const long long slots = static_cast<long long>(K) * per_node;

    // Copy budget per row: floor(K*mu) each, remainder to the last rows.
    const long long base = slots / m;
    const long long extra = slots % m;
    std::vector<long long> budget(m, base);
    for (int i = m - static_cast<int>(extra); i < m; ++i) budget[i] += 1;

    Schedule sched;
    sched.domain = RowDomain::kModelRows;
    sched.per_en.assign(K, {});
    for (auto& lst : sched.per_en) lst.reserve(per_node);
    std::vector<std::vector<char>> holds(K, std::vector<char>(m, 0));
    std::vector<long long> count(m, 0);

    // The dealer can corner itself: every row with budget left is already
    // held by node k. Repair by a swap that keeps budgets and distinctness:
    // hand a spare copy of such a row to a donor node in exchange for one of
    // the donor's rows that k lacks. Donor first slots are spared so each
    // node keeps starting at its own row.
    auto repair = [&](int k) -> int {
        for (int pass = 0; pass < 2; ++pass) {
            for (int avail = 0; avail < m; ++avail) {
                if (count[avail] >= budget[avail]) continue;
                for (int k2 = 0; k2 < K; ++k2) {
                    if (k2 == k || holds[k2][avail]) continue;
                    auto& donor = sched.per_en[k2];
                    for (int j = static_cast<int>(donor.size()) - 1;
                         j >= (pass == 0 ? 1 : 0); --j) {
                        const int swapped = donor[j];
                        if (holds[k][swapped]) continue;
                        donor[j] = avail;
                        holds[k2][swapped] = 0;
                        holds[k2][avail] = 1;
                        ++count[avail];
                        --count[swapped];  // restored when the caller assigns it
                        return swapped;
                    }
                }
            }
        }
        return -1;
    };

    // Deal position-major: position 1 at every node, then position 2, ...
    // A shared cyclic pointer walks the rows; a node skips rows it already
    // holds and rows whose budget is spent.
    int ptr = 0;
    for (int pos = 0; pos < per_node; ++pos) {
        for (int k = 0; k < K; ++k) {
            int assigned = -1;
            for (int step = 0; step < m; ++step) {
                int row = (ptr + step) % m;
                if (count[row] >= budget[row]) continue;
                if (holds[k][row]) continue;
                assigned = row;
                ptr = (row + 1) % m;
                break;
            }
            if (assigned < 0) assigned = repair(k);
            if (assigned < 0)
                throw InfeasibleError("cyclic_schedule: no assignable row for node " +
                                      std::to_string(k + 1) + " at position " +
                                      std::to_string(pos + 1));
            sched.per_en[k].push_back(assigned);
            holds[k][assigned] = 1;
            ++count[assigned];
        }
    }
    return sched;
}

Schedule mds_placement(const SystemConfig& config) {
    const int per_node = config.rows_per_en();
    Schedule sched;
    sched.domain = RowDomain::kCodedRows;
    sched.per_en.assign(config.K, {});
    for (int k = 0; k < config.K; ++k) {
        sched.per_en[k].reserve(per_node);
        for (int i = 0; i < per_node; ++i) sched.per_en[k].push_back(k * per_node + i);
    }
    return sched;
}

std::vector<HybridViolation> validate_hybrid(const SystemConfig& config,
                                             const HybridParams& params) {
    std::vector<HybridViolation> out;
    auto add = [&out](HybridViolation::Kind kind, const std::string& msg) {
        out.push_back({kind, msg});
    };

    const int K = config.K;
    const int m = config.m;

    if (params.rho2 < 1 || params.rho2 > K) {
        add(HybridViolation::kRange,
            "rho2=" + std::to_string(params.rho2) + " outside [1, K]");
        return out;  // later checks need a valid rho2
    }
    if (params.coded_rows < m)
        add(HybridViolation::kRange,
            "coded_rows=" + std::to_string(params.coded_rows) +
                " below m=" + std::to_string(m) + " (rho1 must be >= 1)");
    const int q_lo = config.min_wait();
    if (params.q < q_lo || params.q > K)
        add(HybridViolation::kRange,
            "q=" + std::to_string(params.q) + " outside [" + std::to_string(q_lo) +
                ", " + std::to_string(K) + "]");

    // Storage: rho1*rho2 <= K*mu, as integers coded_rows*rho2 <= K*(m*mu).
    const long long storage_lhs =
        static_cast<long long>(params.coded_rows) * params.rho2;
    const long long storage_rhs =
        static_cast<long long>(K) * config.rows_per_en();
    if (storage_lhs > storage_rhs) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "storage: rho1*rho2 = %.6g exceeds K*mu = %.6g",
                      static_cast<double>(storage_lhs) / m,
                      static_cast<double>(storage_rhs) / m);
        add(HybridViolation::kStorage, buf);
    }

    const long long groups = binomial(K, params.rho2);
    if (groups > 0 && params.coded_rows % groups != 0)
        add(HybridViolation::kDivisibility,
            "coded_rows=" + std::to_string(params.coded_rows) +
                " not divisible by C(K,rho2)=" + std::to_string(groups));

    // Coverage: groups touched by any q finishers must hold >= m distinct
    // rows, i.e. C(K,rho2) - C(K-q,rho2) >= C(K,rho2) * m / coded_rows.
    if (params.coded_rows > 0 && params.q >= 1 && params.q <= K) {
        const long long touched = groups - binomial(K - params.q, params.rho2);
        if (touched * params.coded_rows < groups * static_cast<long long>(m))
            add(HybridViolation::kCoverage,
                "coverage: q=" + std::to_string(params.q) + " finishers reach " +
                    std::to_string(touched) + " of " + std::to_string(groups) +
                    " groups, fewer than m distinct rows");
    }
    return out;
}

Schedule hybrid_placement(const SystemConfig& config, const HybridParams& params) {
    auto violations = validate_hybrid(config, params);
    for (const auto& v : violations) {
        if (v.kind == HybridViolation::kDivisibility || v.kind == HybridViolation::kRange) {
            std::vector<std::string> msgs;
            for (const auto& w : violations) msgs.push_back(w.message);
            throw ConfigError(std::move(msgs));
        }
    }

    const int K = config.K;
    const long long groups = binomial(K, params.rho2);
    const long long b = params.coded_rows / groups;

    Schedule sched;
    sched.domain = RowDomain::kCodedRows;
    sched.per_en.assign(K, {});

    // Walk rho2-subsets of nodes in lexicographic order; subset number g
    // owns coded rows [g*b, (g+1)*b).
    std::vector<int> subset(params.rho2);
    for (int i = 0; i < params.rho2; ++i) subset[i] = i;
    long long g = 0;
    while (true) {
        for (int node : subset)
            for (long long r = g * b; r < (g + 1) * b; ++r)
                sched.per_en[node].push_back(static_cast<int>(r));
        ++g;
        // next lexicographic subset
        int i = params.rho2 - 1;
        while (i >= 0 && subset[i] == K - params.rho2 + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < params.rho2; ++j) subset[j] = subset[j - 1] + 1;
    }
    return sched;
}

}  // namespace edgecode
