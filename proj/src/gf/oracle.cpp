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
#include "edgecode/gf/oracle.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "edgecode/errors.hpp"
#include "edgecode/optimizer.hpp"
#include "edgecode/rng.hpp"
#include "edgecode/straggler.hpp"

namespace edgecode::gf {

SymMatrix scheme_generator(const SystemConfig& config, const SchemeSpec& spec) {
    switch (spec.scheme) {
        case Scheme::kUncoded:
            return identity_matrix(config.m);
        case Scheme::kCoded:
            return mds_generator(config.K * config.rows_per_en(), config.m, config.L);
        case Scheme::kHybrid:
            return mds_generator(spec.hybrid.coded_rows, config.m, config.L);
    }
    return {};
}

namespace {

std::vector<int> fastest_nodes(const StragglerSample& sample, int q) {
    std::vector<int> order(sample.lambdas.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&sample](int a, int b) {
        return sample.lambdas[a] < sample.lambdas[b];
    });
    order.resize(q);
    return order;
}

std::vector<int> union_of_lists(const Schedule& schedule, const std::vector<int>& nodes,
                                const std::vector<int>* prefix_lengths) {
    std::set<int> rows;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& list = schedule.per_en[nodes[i]];
        const int take = prefix_lengths ? (*prefix_lengths)[nodes[i]]
                                        : static_cast<int>(list.size());
        for (int j = 0; j < take; ++j) rows.insert(list[j]);
    }
    return {rows.begin(), rows.end()};
}

}  // namespace

std::vector<int> computed_rows_at_stop(const SystemConfig& config,
                                       const SchemeSpec& spec,
                                       const Schedule& schedule,
                                       const StragglerSample& sample) {
    if (spec.scheme == Scheme::kUncoded) {
        const UcStop stop = uc_stop(config, schedule, sample);
        std::vector<int> all(schedule.per_en.size());
        std::iota(all.begin(), all.end(), 0);
        return union_of_lists(schedule, all, &stop.stop_vector);
    }
    const int q = spec.scheme == Scheme::kCoded ? config.min_wait() : spec.hybrid.q;
    return union_of_lists(schedule, fastest_nodes(sample, q), nullptr);
}

bool VerifyReport::all_passed() const {
    if (!negative_control_failed_as_expected) return false;
    for (const auto& line : lines)
        if (line.passed != line.total) return false;
    return true;
}

namespace {

SymMatrix random_model(const Field& field, int m, int cols, std::uint64_t seed) {
    SplitMix64 rng(seed);
    SymMatrix W(m, cols);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < cols; ++j)
            W.at(i, j) = static_cast<sym_t>(rng.next_u64() & (field.order() - 1));
    return W;
}

struct SchemeCheck {
    std::string label;
    SchemeSpec spec;
    Schedule schedule;
};

// Distinct model rows present in schedule prefixes at time t.
int rows_covered_at(const SystemConfig& config, const Schedule& schedule,
                    const StragglerSample& sample, double t) {
    std::set<int> rows;
    for (std::size_t k = 0; k < schedule.per_en.size(); ++k) {
        int done = completed_by(t, sample.lambdas[k], config);
        done = std::min<int>(done, schedule.per_en[k].size());
        for (int j = 0; j < done; ++j) rows.insert(schedule.per_en[k][j]);
    }
    return static_cast<int>(rows.size());
}

}  // namespace

VerifyReport run_verify_suite(const SystemConfig& config, int samples,
                              std::uint64_t base_seed) {
    config.ensure_valid();
    if (config.K > 8 || config.m > 24)
        throw ConfigError({"verification is exhaustive; limited to K <= 8 and m <= 24, got K=" +
                           std::to_string(config.K) + " m=" + std::to_string(config.m)});

    const Field& field = Field::of(config.L);
    VerifyReport report;

    std::vector<SchemeCheck> checks;
    checks.push_back({"uc", SchemeSpec{Scheme::kUncoded, {}}, cyclic_schedule(config)});
    checks.push_back({"mc", SchemeSpec{Scheme::kCoded, {}}, mds_placement(config)});
    for (const HybridParams& p : enumerate_candidates(config)) {
        char label[96];
        std::snprintf(label, sizeof label, "hs q=%d coded_rows=%d rho2=%d", p.q,
                      p.coded_rows, p.rho2);
        checks.push_back({label, SchemeSpec{Scheme::kHybrid, p}, hybrid_placement(config, p)});
    }

    std::uint64_t draw = 0;
    for (const SchemeCheck& check : checks) {
        VerifyReport::SchemeLine line{check.label, 0, samples};
        const SymMatrix G = scheme_generator(config, check.spec);
        const SymMatrix W = random_model(field, config.m, 3, derive_seed(base_seed, draw++));
        const SymMatrix coded = encode_model(field, G, W);
        if (coded != naive_mul(field, G, W)) {
            report.failures.push_back({check.label, 0, "encode disagrees with plain product", {}});
            line.total += 1;  // unpassable sentinel so all_passed() goes false
            report.lines.push_back(line);
            continue;
        }

        for (int s = 0; s < samples; ++s) {
            const std::uint64_t seed = derive_seed(base_seed, draw++);
            const StragglerSample sample = sample_stragglers(config, seed);
            bool ok = true;
            std::string reason;
            std::vector<int> rows;
            try {
                rows = computed_rows_at_stop(config, check.spec, check.schedule, sample);
                if (!feasible(field, rows, G)) {
                    ok = false;
                    reason = "computed rows rank deficient";
                } else {
                    SymMatrix ivs(rows.size(), coded.cols());
                    for (std::size_t i = 0; i < rows.size(); ++i)
                        for (std::size_t j = 0; j < coded.cols(); ++j)
                            ivs.at(i, j) = coded.at(rows[i], j);
                    if (decode_outputs(field, rows, G, ivs) != W) {
                        ok = false;
                        reason = "decoded outputs differ from the model";
                    }
                }
                if (ok && check.spec.scheme == Scheme::kUncoded) {
                    // Minimality: one event earlier the rows must not cover.
                    const UcStop stop = uc_stop(config, check.schedule, sample);
                    double prev = -1.0;
                    for (std::size_t k = 0; k < check.schedule.per_en.size(); ++k)
                        for (std::size_t j = 1; j <= check.schedule.per_en[k].size(); ++j) {
                            const double t = sample.lambdas[k] + static_cast<double>(j) * config.tau;
                            if (t < stop.stop_time && t > prev) prev = t;
                        }
                    if (prev >= 0 &&
                        rows_covered_at(config, check.schedule, sample, prev) >= config.m) {
                        ok = false;
                        reason = "stop time is not minimal";
                    }
                }
            } catch (const std::exception& e) {
                ok = false;
                reason = e.what();
            }
            if (ok) {
                ++line.passed;
            } else {
                report.failures.push_back({check.label, seed, reason, rows});
            }
        }
        report.lines.push_back(line);
    }

    // Negative control: a schedule that never computes row 0 has to be
    // reported infeasible, proving the coverage check can fail.
    {
        Schedule broken = cyclic_schedule(config);
        for (auto& list : broken.per_en)
            for (int& row : list)
                if (row == 0) row = 1;
        const StragglerSample sample =
            sample_stragglers(config, derive_seed(base_seed, draw++));
        try {
            uc_stop(config, broken, sample);
            report.negative_control_failed_as_expected = false;
        } catch (const InfeasibleError&) {
            report.negative_control_failed_as_expected = true;
        }
    }
    return report;
}

}  // namespace edgecode::gf
