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
#include "edgecode/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <tuple>

#include "edgecode/optimizer.hpp"
#include "edgecode/rng.hpp"
#include "edgecode/straggler.hpp"

namespace edgecode {

namespace {

// Per-trial (delta_C, delta_D) pairs. Both components are gamma-free, so one
// set of pairs serves every gamma with identical randomness.
struct PairSet {
    std::vector<double> delta_C;
    std::vector<double> delta_D;
};

TrialReport aggregate(const PairSet& pairs, double gamma, std::uint64_t base_seed) {
    TrialReport report;
    report.trials = static_cast<long long>(pairs.delta_C.size());
    report.base_seed = base_seed;
    if (report.trials == 0) return report;

    double sum_c = 0, sum_d = 0, sum_cc = 0, sum_dd = 0, sum_cd = 0;
    for (std::size_t i = 0; i < pairs.delta_C.size(); ++i) {
        const double c = pairs.delta_C[i];
        const double d = pairs.delta_D[i];
        sum_c += c;
        sum_d += d;
        sum_cc += c * c;
        sum_dd += d * d;
        sum_cd += c * d;
    }
    const double n = static_cast<double>(report.trials);
    report.mean_delta_C = sum_c / n;
    report.mean_delta_D = sum_d / n;
    report.mean_delta = report.mean_delta_C + gamma * report.mean_delta_D;

    if (report.trials >= 2) {
        // var(C + gamma*D) from the second-moment accumulators.
        const double s2 = sum_cc + gamma * gamma * sum_dd + 2.0 * gamma * sum_cd;
        const double mean = report.mean_delta;
        double var = (s2 - n * mean * mean) / (n - 1.0);
        if (var < 0) var = 0;  // rounding around a degenerate distribution
        report.ci95_delta = 1.96 * std::sqrt(var / n);
    }
    return report;
}

PairSet draw_pairs(const SystemConfig& config, const SchemeSpec& spec,
                   long long trials, std::uint64_t base_seed) {
    PairSet pairs;
    if (trials <= 0) return pairs;
    pairs.delta_C.reserve(trials);
    pairs.delta_D.reserve(trials);

    Schedule uc_sched;
    double hs_dl = 0.0;
    int hs_rows = 0;
    if (spec.scheme == Scheme::kUncoded) {
        uc_sched = cyclic_schedule(config);
    } else if (spec.scheme == Scheme::kHybrid) {
        hs_dl = hs_downlink(config, hs_profile(config, spec.hybrid));
        hs_rows = hs_rows_per_en(config, spec.hybrid);
    }

    for (long long t = 0; t < trials; ++t) {
        const StragglerSample sample =
            sample_stragglers(config, derive_seed(base_seed, t));
        switch (spec.scheme) {
            case Scheme::kUncoded: {
                const LatencyBreakdown bd = uc_latency(config, uc_sched, sample);
                pairs.delta_C.push_back(bd.delta_C);
                pairs.delta_D.push_back(bd.delta_D);
                break;
            }
            case Scheme::kCoded: {
                const LatencyBreakdown bd = mc_latency_sample(config, sample);
                pairs.delta_C.push_back(bd.delta_C);
                pairs.delta_D.push_back(bd.delta_D);
                break;
            }
            case Scheme::kHybrid: {
                std::vector<double> sorted = sample.lambdas;
                std::sort(sorted.begin(), sorted.end());
                pairs.delta_C.push_back(sorted[spec.hybrid.q - 1] / config.tau + hs_rows);
                pairs.delta_D.push_back(hs_dl);
                break;
            }
        }
    }
    return pairs;
}

}  // namespace

TrialReport run_trials(const SystemConfig& config, const SchemeSpec& scheme,
                       long long trials, std::uint64_t base_seed) {
    return aggregate(draw_pairs(config, scheme, trials, base_seed), config.gamma,
                     base_seed);
}

std::vector<SweepRow> sweep_gamma(const SystemConfig& config,
                                  const std::vector<Scheme>& schemes,
                                  const std::vector<double>& gamma_grid,
                                  long long trials, std::uint64_t base_seed) {
    std::vector<SweepRow> rows;

    const bool want_uc =
        std::find(schemes.begin(), schemes.end(), Scheme::kUncoded) != schemes.end();
    const bool want_mc =
        std::find(schemes.begin(), schemes.end(), Scheme::kCoded) != schemes.end();

    PairSet uc_pairs, mc_pairs;
    if (want_uc)
        uc_pairs = draw_pairs(config, SchemeSpec{Scheme::kUncoded, {}}, trials, base_seed);
    if (want_mc)
        mc_pairs = draw_pairs(config, SchemeSpec{Scheme::kCoded, {}}, trials, base_seed);

    // Hybrid pairs depend only on the chosen parameters, and the optimizer's
    // pick varies with gamma; cache by parameter triple.
    std::map<std::tuple<int, int, int>, PairSet> hs_cache;

    for (const double g : gamma_grid) {
        SystemConfig at_gamma = config;
        at_gamma.gamma = g;

        for (const Scheme s : schemes) {
            if (s == Scheme::kUncoded) {
                rows.push_back({g, "uc", std::nullopt, 0.0, aggregate(uc_pairs, g, base_seed)});
            } else if (s == Scheme::kCoded) {
                rows.push_back({g, "mc", std::nullopt, 0.0, aggregate(mc_pairs, g, base_seed)});
                const LatencyBreakdown cf = mc_latency_closed(at_gamma);
                TrialReport exact;
                exact.mean_delta_C = cf.delta_C;
                exact.mean_delta_D = cf.delta_D;
                exact.mean_delta = cf.delta;
                exact.base_seed = base_seed;
                rows.push_back({g, "mc-exact", std::nullopt, 0.0, exact});
            } else if (s == Scheme::kHybrid) {
                const auto opt = optimize(at_gamma);
                if (!opt) continue;
                const HybridParams p = opt->best.params;
                auto key = std::make_tuple(p.q, p.coded_rows, p.rho2);
                auto it = hs_cache.find(key);
                if (it == hs_cache.end())
                    it = hs_cache
                             .emplace(key, draw_pairs(at_gamma, SchemeSpec{Scheme::kHybrid, p},
                                                      trials, base_seed))
                             .first;
                rows.push_back({g, "hs", p, p.rho1(config), aggregate(it->second, g, base_seed)});
            }
        }
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "gamma,scheme,q,rho1,rho2,trials,seed,"
        "mean_delta_C,mean_delta_D,mean_delta,ci95\n";
    char buf[320];
    for (const SweepRow& row : rows) {
        char params[64] = ",,";
        if (row.params)
            std::snprintf(params, sizeof params, "%d,%.10g,%d", row.params->q,
                          row.rho1, row.params->rho2);
        std::snprintf(buf, sizeof buf, "%.10g,%s,%s,%lld,%llu,%.10g,%.10g,%.10g,%.10g\n",
                      row.gamma, row.scheme.c_str(), params, row.report.trials,
                      static_cast<unsigned long long>(row.report.base_seed),
                      row.report.mean_delta_C, row.report.mean_delta_D,
                      row.report.mean_delta, row.report.ci95_delta);
        out += buf;
    }
    return out;
}

}  // namespace edgecode
