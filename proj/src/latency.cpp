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
#include "edgecode/latency.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "edgecode/analytic.hpp"
#include "edgecode/errors.hpp"

namespace edgecode {

long long RedundancyProfile::distinct_values() const {
    long long total = 0;
    for (const auto& [r, c] : counts) total += c;
    return total;
}

long long RedundancyProfile::total_computations() const {
    long long total = 0;
    for (const auto& [r, c] : counts) total += static_cast<long long>(r) * c;
    return total;
}

double zf_slot_cost(int r, int users) {
    if (r < 1) throw std::domain_error("zf_slot_cost: redundancy below 1");
    return 1.0 / std::min(r, users);
}

namespace {

// Computed-values-per-node at time t, capped at each node's list length.
std::vector<int> progress_at(const SystemConfig& config, const Schedule& schedule,
                             const StragglerSample& sample, double t) {
    std::vector<int> done(schedule.per_en.size());
    for (std::size_t k = 0; k < schedule.per_en.size(); ++k) {
        int d = completed_by(t, sample.lambdas[k], config);
        done[k] = std::min<int>(d, schedule.per_en[k].size());
    }
    return done;
}

bool covers_all(const SystemConfig& config, const Schedule& schedule,
                const std::vector<int>& done) {
    std::vector<char> seen(config.m, 0);
    int covered = 0;
    for (std::size_t k = 0; k < schedule.per_en.size(); ++k)
        for (int j = 0; j < done[k]; ++j) {
            const int row = schedule.per_en[k][j];
            if (!seen[row]) {
                seen[row] = 1;
                ++covered;
            }
        }
    return covered == config.m;
}

}  // namespace

UcStop uc_stop(const SystemConfig& config, const Schedule& schedule,
               const StragglerSample& sample) {
    std::vector<double> events;
    for (std::size_t k = 0; k < schedule.per_en.size(); ++k)
        for (std::size_t j = 1; j <= schedule.per_en[k].size(); ++j)
            events.push_back(sample.lambdas[k] + static_cast<double>(j) * config.tau);
    std::sort(events.begin(), events.end());

    if (events.empty() ||
        !covers_all(config, schedule, progress_at(config, schedule, sample, events.back())))
        throw InfeasibleError("schedule never covers every row");

    // Coverage is monotone in t, so the earliest covering event bisects.
    std::size_t lo = 0, hi = events.size() - 1;
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (covers_all(config, schedule, progress_at(config, schedule, sample, events[mid])))
            hi = mid;
        else
            lo = mid + 1;
    }

    UcStop stop;
    stop.stop_time = events[lo];
    stop.stop_vector = progress_at(config, schedule, sample, events[lo]);
    return stop;
}

RedundancyProfile uc_redundancy(const SystemConfig& config, const Schedule& schedule,
                                const std::vector<int>& stop_vector) {
    std::vector<int> copies(config.m, 0);
    for (std::size_t k = 0; k < schedule.per_en.size(); ++k)
        for (int j = 0; j < stop_vector[k]; ++j) ++copies[schedule.per_en[k][j]];
    RedundancyProfile profile;
    for (int r : copies)
        if (r > 0) ++profile.counts[r];
    return profile;
}

LatencyBreakdown uc_latency(const SystemConfig& config, const Schedule& schedule,
                            const StragglerSample& sample) {
    const UcStop stop = uc_stop(config, schedule, sample);
    const RedundancyProfile profile = uc_redundancy(config, schedule, stop.stop_vector);

    LatencyBreakdown bd;
    bd.delta_C = stop.stop_time / config.tau;
    for (const auto& [r, c] : profile.counts)
        bd.delta_D += static_cast<double>(c) * zf_slot_cost(r, config.N);
    bd.delta = bd.delta_C + config.gamma * bd.delta_D;
    return bd;
}

LatencyBreakdown mc_latency_sample(const SystemConfig& config,
                                   const StragglerSample& sample) {
    const int q = config.min_wait();
    std::vector<double> sorted = sample.lambdas;
    std::sort(sorted.begin(), sorted.end());

    LatencyBreakdown bd;
    bd.delta_C = sorted[q - 1] / config.tau + config.rows_per_en();
    bd.delta_D = config.m;  // every coded value sits at one node, no precoding gain
    bd.delta = bd.delta_C + config.gamma * bd.delta_D;
    return bd;
}

LatencyBreakdown mc_latency_closed(const SystemConfig& config) {
    const int q = config.min_wait();
    LatencyBreakdown bd;
    bd.delta_C = expected_order_stat(config.K, q, config.eta) / config.tau +
                 config.rows_per_en();
    bd.delta_D = config.m;
    bd.delta = bd.delta_C + config.gamma * bd.delta_D;
    return bd;
}

RedundancyProfile hs_profile(const SystemConfig& config, const HybridParams& params) {
    const auto violations = validate_hybrid(config, params);
    for (const auto& v : violations) {
        if (v.kind == HybridViolation::kRange || v.kind == HybridViolation::kDivisibility) {
            std::vector<std::string> msgs;
            for (const auto& w : violations) msgs.push_back(w.message);
            throw ConfigError(std::move(msgs));
        }
    }
    const int K = config.K;
    const long long groups = binomial(K, params.rho2);
    const long long b = params.coded_rows / groups;

    // A group stored at a rho2-subset with exactly r of the q finishers has
    // each of its b values available r times. Which nodes finished does not
    // matter, only how many.
    RedundancyProfile profile;
    const int r_lo = std::max(params.rho2 - (K - params.q), 1);
    const int r_hi = std::min(params.q, params.rho2);
    for (int r = r_lo; r <= r_hi; ++r) {
        const long long groups_r = binomial(params.q, r) * binomial(K - params.q, params.rho2 - r);
        if (groups_r > 0) profile.counts[r] = groups_r * b;
    }
    return profile;
}

int hs_send_threshold(const SystemConfig& config, const RedundancyProfile& profile) {
    if (profile.counts.empty()) throw InfeasibleError("empty redundancy profile");
    const int r_max = profile.counts.rbegin()->first;
    long long tail = 0;
    int threshold = r_max + 1;  // empty tail; lowered while it still fits in m
    for (auto it = profile.counts.rbegin(); it != profile.counts.rend(); ++it) {
        if (tail + it->second > config.m) break;
        tail += it->second;
        threshold = it->first;
    }
    return threshold;
}

double hs_downlink(const SystemConfig& config, const RedundancyProfile& profile) {
    if (profile.distinct_values() < config.m)
        throw InfeasibleError("profile holds " + std::to_string(profile.distinct_values()) +
                              " distinct values, need " + std::to_string(config.m));

    const int threshold = hs_send_threshold(config, profile);
    double cost = 0.0;
    long long sent = 0;
    for (auto it = profile.counts.rbegin(); it != profile.counts.rend(); ++it) {
        if (it->first < threshold) break;
        cost += static_cast<double>(it->second) * zf_slot_cost(it->first, config.N);
        sent += it->second;
    }
    const long long remainder = config.m - sent;
    if (remainder > 0) cost += static_cast<double>(remainder) * zf_slot_cost(threshold - 1, config.N);
    return cost;
}

int hs_rows_per_en(const SystemConfig& config, const HybridParams& params) {
    // rho1*rho2*m/K; exact since C(K,rho2) | coded_rows and rho2*C(K,rho2)/K
    // is the integer C(K-1, rho2-1).
    return static_cast<int>(static_cast<long long>(params.coded_rows) * params.rho2 / config.K);
}

LatencyBreakdown hs_latency_sample(const SystemConfig& config, const HybridParams& params,
                                   const StragglerSample& sample) {
    std::vector<double> sorted = sample.lambdas;
    std::sort(sorted.begin(), sorted.end());

    LatencyBreakdown bd;
    bd.delta_C = sorted[params.q - 1] / config.tau + hs_rows_per_en(config, params);
    bd.delta_D = hs_downlink(config, hs_profile(config, params));
    bd.delta = bd.delta_C + config.gamma * bd.delta_D;
    return bd;
}

LatencyBreakdown hs_latency_closed(const SystemConfig& config, const HybridParams& params) {
    LatencyBreakdown bd;
    bd.delta_C = expected_order_stat(config.K, params.q, config.eta) / config.tau +
                 hs_rows_per_en(config, params);
    bd.delta_D = hs_downlink(config, hs_profile(config, params));
    bd.delta = bd.delta_C + config.gamma * bd.delta_D;
    return bd;
}

const char* scheme_name(Scheme s) {
    switch (s) {
        case Scheme::kUncoded: return "uc";
        case Scheme::kCoded: return "mc";
        case Scheme::kHybrid: return "hs";
    }
    return "?";
}

std::string latency_csv_row(const SystemConfig& config, const SchemeSpec& spec,
                            std::uint64_t seed, const LatencyBreakdown& bd) {
    char params[64] = ",,";
    if (spec.scheme == Scheme::kHybrid)
        std::snprintf(params, sizeof params, "%d,%.10g,%d", spec.hybrid.q,
                      spec.hybrid.rho1(config), spec.hybrid.rho2);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s,%s,%llu,%.10g,%.10g,%.10g",
                  scheme_name(spec.scheme), params,
                  static_cast<unsigned long long>(seed), bd.delta_C, bd.delta_D, bd.delta);
    return buf;
}

}  // namespace edgecode
