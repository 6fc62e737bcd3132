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
#include "edgecode/optimizer.hpp"

#include <cstdio>

namespace edgecode {

std::vector<HybridParams> enumerate_candidates(const SystemConfig& config) {
    std::vector<HybridParams> out;
    const int K = config.K;
    const long long storage_total = static_cast<long long>(K) * config.rows_per_en();

    for (int q = config.min_wait(); q <= K; ++q) {
        for (int rho2 = 1; rho2 <= K; ++rho2) {
            const long long groups = binomial(K, rho2);
            // coded_rows walks multiples of C(K,rho2) from rho1 = 1 up to
            // the storage bound rho1*rho2 <= K*mu.
            const long long hi = storage_total / rho2;
            const long long lo = ((config.m + groups - 1) / groups) * groups;
            for (long long mprime = lo; mprime <= hi; mprime += groups) {
                HybridParams p{q, static_cast<int>(mprime), rho2};
                if (hybrid_ok(config, p)) out.push_back(p);
            }
        }
    }
    return out;
}

std::optional<Optimum> optimize(const SystemConfig& config) {
    const std::vector<HybridParams> params = enumerate_candidates(config);
    if (params.empty()) return std::nullopt;

    Optimum opt;
    opt.table.reserve(params.size());
    std::size_t best_idx = 0;
    for (const HybridParams& p : params) {
        HybridCandidate cand;
        cand.params = p;
        cand.rho1 = p.rho1(config);
        cand.b = p.coded_rows / binomial(config.K, p.rho2);
        const RedundancyProfile profile = hs_profile(config, p);
        cand.r_min = profile.counts.begin()->first;
        cand.r_max = profile.counts.rbegin()->first;
        cand.send_threshold = hs_send_threshold(config, profile);
        cand.rows_per_en = hs_rows_per_en(config, p);
        cand.storage_cap = config.rows_per_en();
        cand.on_coarse_grid =
            (static_cast<long long>(p.q) * p.coded_rows) % config.m == 0 &&
            static_cast<long long>(p.q) * p.coded_rows <=
                static_cast<long long>(config.K) * config.m;
        cand.expected = hs_latency_closed(config, p);

        opt.table.push_back(cand);
        // Strict comparison keeps the earliest of tied minima; enumeration
        // order is exactly the documented tie-break.
        if (cand.expected.delta < opt.table[best_idx].expected.delta)
            best_idx = opt.table.size() - 1;
    }
    opt.best = opt.table[best_idx];
    return opt;
}

std::string candidates_csv(const std::vector<HybridCandidate>& table) {
    std::string out =
        "q,rho1,rho2,b,r_min,r_max,r_q,delta_C,delta_D,delta,"
        "rows_per_en,storage_cap,on_coarse_grid\n";
    char buf[320];
    for (const HybridCandidate& c : table) {
        std::snprintf(buf, sizeof buf,
                      "%d,%.10g,%d,%lld,%d,%d,%d,%.10g,%.10g,%.10g,%d,%d,%d\n",
                      c.params.q, c.rho1, c.params.rho2, c.b, c.r_min, c.r_max,
                      c.send_threshold, c.expected.delta_C, c.expected.delta_D,
                      c.expected.delta, c.rows_per_en, c.storage_cap,
                      c.on_coarse_grid ? 1 : 0);
        out += buf;
    }
    return out;
}

}  // namespace edgecode
