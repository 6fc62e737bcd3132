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
#include "edgecode/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "edgecode/errors.hpp"
#include "edgecode/gf/oracle.hpp"
#include "edgecode/montecarlo.hpp"
#include "edgecode/optimizer.hpp"
#include "edgecode/rng.hpp"
#include "edgecode/straggler.hpp"

namespace edgecode::cli {

namespace {

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

void apply_value(SystemConfig& sc, const std::string& key, const std::string& value,
                 std::vector<std::string>& problems) {
    try {
        if (key == "K") {
            sc.K = std::stoi(value);
        } else if (key == "N") {
            sc.N = std::stoi(value);
        } else if (key == "m") {
            sc.m = std::stoi(value);
        } else if (key == "L") {
            sc.L = std::stoi(value);
        } else if (key == "mu") {
            sc.mu = parse_ratio(value);
        } else if (key == "tau") {
            sc.tau = parse_ratio(value);
        } else if (key == "eta") {
            sc.eta = parse_ratio(value);
        } else if (key == "gamma") {
            sc.gamma = parse_ratio(value);
        } else {
            problems.push_back("unknown config key '" + key + "'");
        }
    } catch (const std::exception&) {
        problems.push_back("config key '" + key + "': cannot parse value '" + value + "'");
    }
}

}  // namespace

namespace {

// std::stod wrapper that reports every malformed input the same way.
double parse_full_double(const std::string& text, const std::string& whole) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw ConfigError({"bad number '" + whole + "'"});
    }
    if (used != text.size()) throw ConfigError({"trailing characters in number '" + whole + "'"});
    return v;
}

}  // namespace

double parse_ratio(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return parse_full_double(text, text);
    const double num = parse_full_double(text.substr(0, slash), text);
    const double den = parse_full_double(text.substr(slash + 1), text);
    if (den == 0.0) throw ConfigError({"zero denominator in '" + text + "'"});
    return num / den;
}

std::vector<double> parse_gamma_grid(const std::string& text) {
    double start = 0, stop = 0, step = 0;
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ConfigError({"gamma grid '" + text + "' is not start:stop:step"});
    try {
        start = parse_ratio(text.substr(0, c1));
        stop = parse_ratio(text.substr(c1 + 1, c2 - c1 - 1));
        step = parse_ratio(text.substr(c2 + 1));
    } catch (const ConfigError&) {
        throw ConfigError({"gamma grid '" + text + "' is not start:stop:step"});
    }
    if (start < 0 || stop < start)
        throw ConfigError({"gamma grid '" + text + "': need 0 <= start <= stop"});
    std::vector<double> grid;
    if (step <= 0) {
        if (stop != start)
            throw ConfigError({"gamma grid '" + text + "': step must be positive"});
        grid.push_back(start);
        return grid;
    }
    const long long count =
        static_cast<long long>(std::floor((stop - start) / step + 1e-9)) + 1;
    grid.reserve(count);
    for (long long i = 0; i < count; ++i) grid.push_back(start + static_cast<double>(i) * step);
    return grid;
}

SystemConfig load_system_config(const std::string& config_path,
                                const std::vector<ConfigOverride>& overrides) {
    SystemConfig sc;
    std::vector<std::string> problems;

    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw ConfigError({"cannot open config file '" + config_path + "'"});
        nlohmann::json doc;
        try {
            in >> doc;
        } catch (const std::exception& e) {
            throw ConfigError({"config file '" + config_path + "': " + e.what()});
        }
        if (!doc.is_object()) {
            problems.push_back("config file '" + config_path + "' is not a JSON object");
        } else {
            for (const auto& [key, value] : doc.items()) {
                std::string text;
                if (value.is_string())
                    text = value.get<std::string>();
                else if (value.is_number() || value.is_boolean())
                    text = value.dump();
                else {
                    problems.push_back("config key '" + key + "' has a non-scalar value");
                    continue;
                }
                apply_value(sc, key, text, problems);
            }
        }
    }

    for (const ConfigOverride& ov : overrides) apply_value(sc, ov.key, ov.value, problems);

    for (const std::string& p : sc.validate()) problems.push_back(p);
    if (!problems.empty()) throw ConfigError(std::move(problems));
    return sc;
}

namespace {

std::string config_line(const SystemConfig& sc) {
    return "config: K=" + std::to_string(sc.K) + " N=" + std::to_string(sc.N) +
           " m=" + std::to_string(sc.m) + " mu=" + fmt_g(sc.mu) +
           " tau=" + fmt_g(sc.tau) + " eta=" + fmt_g(sc.eta) +
           " gamma=" + fmt_g(sc.gamma) + " L=" + std::to_string(sc.L);
}

// Writes `csv` to rc.out_path when set, otherwise to `fallback`.
// Returns false on I/O failure.
bool emit_csv(const RunConfig& rc, std::ostream& fallback, const std::string& csv) {
    if (rc.out_path.empty()) {
        fallback << csv;
        return static_cast<bool>(fallback);
    }
    std::ofstream f(rc.out_path);
    if (!f) return false;
    f << csv;
    f.flush();
    return static_cast<bool>(f);
}

std::optional<HybridParams> pick_hybrid(const RunConfig& rc) {
    if (rc.hybrid) return rc.hybrid;
    const auto opt = optimize(rc.system);
    if (!opt) return std::nullopt;
    return opt->best.params;
}

}  // namespace

int cmd_analyze(const RunConfig& rc, std::ostream& out) {
    const SystemConfig& sc = rc.system;
    out << config_line(sc) << "\n";
    for (const Scheme s : rc.schemes) {
        if (s == Scheme::kUncoded) {
            out << "uc: no closed form; use simulate\n";
        } else if (s == Scheme::kCoded) {
            const LatencyBreakdown bd = mc_latency_closed(sc);
            out << "mc: delta = " << fmt_g(bd.delta_C) << " + " << fmt_g(bd.delta_D)
                << " * gamma\n";
            out << "mc at gamma=" << fmt_g(sc.gamma) << ": delta_C=" << fmt_g(bd.delta_C)
                << " delta_D=" << fmt_g(bd.delta_D) << " delta=" << fmt_g(bd.delta) << "\n";
        } else {
            std::optional<HybridParams> p = pick_hybrid(rc);
            if (!p) {
                out << "hs: no feasible parameters\n";
                continue;
            }
            const LatencyBreakdown bd = hs_latency_closed(sc, *p);
            const RedundancyProfile profile = hs_profile(sc, *p);
            out << "hs q=" << p->q << " coded_rows=" << p->coded_rows << " rho2=" << p->rho2
                << " b=" << p->coded_rows / binomial(sc.K, p->rho2)
                << " r_q=" << hs_send_threshold(sc, profile) << ": delta = "
                << fmt_g(bd.delta_C) << " + " << fmt_g(bd.delta_D) << " * gamma\n";
            out << "hs profile:";
            for (auto it = profile.counts.rbegin(); it != profile.counts.rend(); ++it)
                out << " r=" << it->first << " count=" << it->second;
            out << "\n";
            out << "hs at gamma=" << fmt_g(sc.gamma) << ": delta_C=" << fmt_g(bd.delta_C)
                << " delta_D=" << fmt_g(bd.delta_D) << " delta=" << fmt_g(bd.delta) << "\n";
        }
    }
    return kExitOk;
}

int cmd_simulate(const RunConfig& rc, std::ostream& out) {
    const SystemConfig& sc = rc.system;
    std::vector<SweepRow> rows;
    std::optional<std::ofstream> trace;
    if (!rc.trace_path.empty()) {
        trace.emplace(rc.trace_path);
        if (!*trace) return kExitIoError;
        *trace << "scheme,q,rho1,rho2,seed,delta_C,delta_D,delta\n";
    }

    for (const Scheme s : rc.schemes) {
        SchemeSpec spec{s, {}};
        double rho1 = 0.0;
        std::optional<HybridParams> p;
        if (s == Scheme::kHybrid) {
            p = pick_hybrid(rc);
            if (!p) continue;
            spec.hybrid = *p;
            rho1 = p->rho1(sc);
        }
        rows.push_back({sc.gamma, scheme_name(s), p, rho1,
                        run_trials(sc, spec, rc.trials, rc.seed)});
        if (s == Scheme::kCoded) {
            // closed-form companion row, same shape as the sweep table
            const LatencyBreakdown cf = mc_latency_closed(sc);
            TrialReport exact;
            exact.mean_delta_C = cf.delta_C;
            exact.mean_delta_D = cf.delta_D;
            exact.mean_delta = cf.delta;
            exact.base_seed = rc.seed;
            rows.push_back({sc.gamma, "mc-exact", std::nullopt, 0.0, exact});
        }

        if (trace) {
            Schedule sched;
            if (s == Scheme::kUncoded) sched = cyclic_schedule(sc);
            for (long long t = 0; t < rc.trials; ++t) {
                const std::uint64_t seed = derive_seed(rc.seed, t);
                const StragglerSample sample = sample_stragglers(sc, seed);
                LatencyBreakdown bd;
                if (s == Scheme::kUncoded)
                    bd = uc_latency(sc, sched, sample);
                else if (s == Scheme::kCoded)
                    bd = mc_latency_sample(sc, sample);
                else
                    bd = hs_latency_sample(sc, spec.hybrid, sample);
                *trace << latency_csv_row(sc, spec, seed, bd) << "\n";
            }
        }
    }
    if (trace) {
        trace->flush();
        if (!*trace) return kExitIoError;
    }
    if (!emit_csv(rc, out, sweep_csv(rows))) return kExitIoError;
    return kExitOk;
}

int cmd_optimize_hybrid(const RunConfig& rc, std::ostream& out) {
    const auto opt = optimize(rc.system);
    if (!opt) {
        out << "no feasible hybrid parameters for " << config_line(rc.system) << "\n";
        return kExitConfigError;
    }
    const HybridCandidate& best = opt->best;
    out << config_line(rc.system) << "\n";
    out << "best: q=" << best.params.q << " rho1=" << fmt_g(best.rho1)
        << " rho2=" << best.params.rho2 << " coded_rows=" << best.params.coded_rows
        << " b=" << best.b << " r_q=" << best.send_threshold
        << " delta_C=" << fmt_g(best.expected.delta_C)
        << " delta_D=" << fmt_g(best.expected.delta_D)
        << " delta=" << fmt_g(best.expected.delta) << "\n";
    out << "candidates: " << opt->table.size() << "\n";
    if (!emit_csv(rc, out, candidates_csv(opt->table))) return kExitIoError;
    return kExitOk;
}

int cmd_sweep(const RunConfig& rc, std::ostream& out) {
    std::vector<double> grid = rc.gamma_grid;
    if (grid.empty()) grid = parse_gamma_grid("0:2:0.1");

    const std::vector<SweepRow> rows =
        sweep_gamma(rc.system, rc.schemes, grid, rc.trials, rc.seed);
    if (!emit_csv(rc, out, sweep_csv(rows))) return kExitIoError;

    // Ordering summary over the simulated curves: report every adjacent grid
    // interval where two schemes trade places.
    std::vector<std::string> labels;
    for (const SweepRow& row : rows)
        if (row.scheme != "mc-exact" &&
            std::find(labels.begin(), labels.end(), row.scheme) == labels.end())
            labels.push_back(row.scheme);
    auto mean_at = [&rows](const std::string& label, double gamma) -> std::optional<double> {
        for (const SweepRow& row : rows)
            if (row.scheme == label && row.gamma == gamma) return row.report.mean_delta;
        return std::nullopt;
    };
    bool any = false;
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t bidx = a + 1; bidx < labels.size(); ++bidx)
            for (std::size_t i = 1; i < grid.size(); ++i) {
                const auto a0 = mean_at(labels[a], grid[i - 1]);
                const auto b0 = mean_at(labels[bidx], grid[i - 1]);
                const auto a1 = mean_at(labels[a], grid[i]);
                const auto b1 = mean_at(labels[bidx], grid[i]);
                if (!a0 || !b0 || !a1 || !b1) continue;
                const double d0 = *a0 - *b0;
                const double d1 = *a1 - *b1;
                if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
                    out << "# crossover: " << labels[a] << " vs " << labels[bidx]
                        << " between gamma=" << fmt_g(grid[i - 1]) << " and gamma="
                        << fmt_g(grid[i]) << "\n";
                    any = true;
                }
            }
    if (!any) out << "# no ordering changes on the grid\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& rc, std::ostream& out) {
    const gf::VerifyReport report =
        gf::run_verify_suite(rc.system, rc.verify_samples, rc.seed);
    out << config_line(rc.system) << "\n";
    for (const auto& line : report.lines)
        out << line.label << ": " << line.passed << "/" << line.total << "\n";
    out << "negative control (non-covering schedule): "
        << (report.negative_control_failed_as_expected ? "failed as expected"
                                                       : "NOT DETECTED")
        << "\n";
    for (const auto& f : report.failures) {
        out << "FAIL scheme=" << f.scheme << " seed=" << f.seed << " reason=" << f.reason
            << " rows=[";
        for (std::size_t i = 0; i < f.computed_rows.size(); ++i) {
            if (i) out << ",";
            out << f.computed_rows[i] + 1;
        }
        out << "]\n";
    }
    return report.all_passed() ? kExitOk : kExitVerifyFailure;
}

}  // namespace edgecode::cli
