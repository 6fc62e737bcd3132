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
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgecode/cli.hpp"
#include "edgecode/errors.hpp"
#include "edgecode/schedule.hpp"

namespace {

using edgecode::ConfigError;
using edgecode::HybridParams;
using edgecode::InfeasibleError;
using edgecode::Scheme;
using namespace edgecode::cli;

struct Flags {
    std::string config;
    std::vector<std::string> schemes;
    std::string gamma_grid;
    long long trials = 10000;
    std::uint64_t seed = 1;
    std::string out;
    std::string k, n, m, l, mu, tau, eta, gamma;
    int q = -1;
    int coded_rows = -1;
    int rho2 = -1;
    int samples = 100;
    std::string trace;
};

void add_common(CLI::App* cmd, Flags& f) {
    cmd->add_option("--config", f.config, "JSON config file");
    cmd->add_option("--scheme", f.schemes, "scheme list: uc, mc, hs")->delimiter(',');
    cmd->add_option("--gamma-grid", f.gamma_grid, "gamma grid as start:stop:step");
    cmd->add_option("--trials", f.trials, "Monte Carlo trials");
    cmd->add_option("--seed", f.seed, "base RNG seed");
    cmd->add_option("--out", f.out, "CSV output path (default: stdout)");
    cmd->add_option("--eta", f.eta, "setup-time rate");
    cmd->add_option("--mu", f.mu, "storage fraction, decimal or p/q");
    cmd->add_option("--m", f.m, "model rows");
    cmd->add_option("--k", f.k, "edge nodes");
    cmd->add_option("--n", f.n, "users");
    cmd->add_option("--tau", f.tau, "seconds per inner product");
    cmd->add_option("--gamma", f.gamma, "downlink/compute time ratio");
    cmd->add_option("--l,--field-bits", f.l, "verification symbol width: 4, 8, or 16");
    cmd->add_option("--q", f.q, "hybrid: nodes awaited");
    cmd->add_option("--coded-rows", f.coded_rows, "hybrid: code length");
    cmd->add_option("--rho2", f.rho2, "hybrid: replication factor");
    cmd->add_option("--samples", f.samples, "verification samples per scheme");
    cmd->add_option("--trace", f.trace, "per-trial latency CSV path (simulate)");
}

RunConfig build_run_config(const Flags& f) {
    std::vector<ConfigOverride> overrides;
    auto push = [&overrides](const char* key, const std::string& value) {
        if (!value.empty()) overrides.push_back({key, value});
    };
    push("K", f.k);
    push("N", f.n);
    push("m", f.m);
    push("L", f.l);
    push("mu", f.mu);
    push("tau", f.tau);
    push("eta", f.eta);
    push("gamma", f.gamma);

    RunConfig rc;
    rc.system = load_system_config(f.config, overrides);
    if (!f.schemes.empty()) {
        rc.schemes.clear();
        std::vector<std::string> bad;
        for (const std::string& s : f.schemes) {
            if (s == "uc")
                rc.schemes.push_back(Scheme::kUncoded);
            else if (s == "mc")
                rc.schemes.push_back(Scheme::kCoded);
            else if (s == "hs")
                rc.schemes.push_back(Scheme::kHybrid);
            else
                bad.push_back("unknown scheme '" + s + "' (expected uc, mc, or hs)");
        }
        if (!bad.empty()) throw ConfigError(std::move(bad));
    }
    if (!f.gamma_grid.empty()) rc.gamma_grid = parse_gamma_grid(f.gamma_grid);
    rc.trials = f.trials;
    rc.seed = f.seed;
    rc.out_path = f.out;
    rc.trace_path = f.trace;
    rc.verify_samples = f.samples;

    if (f.q >= 0 || f.coded_rows >= 0 || f.rho2 >= 0) {
        if (f.q < 0 || f.coded_rows < 0 || f.rho2 < 0)
            throw ConfigError({"explicit hybrid parameters need all of --q, --coded-rows, --rho2"});
        const HybridParams p{f.q, f.coded_rows, f.rho2};
        const auto violations = edgecode::validate_hybrid(rc.system, p);
        if (!violations.empty()) {
            std::vector<std::string> msgs;
            for (const auto& v : violations) msgs.push_back(v.message);
            throw ConfigError(std::move(msgs));
        }
        rc.hybrid = p;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Latency analysis for coded distributed linear inference at the wireless edge"};
    app.require_subcommand(1);

    Flags f;
    CLI::App* analyze = app.add_subcommand("analyze", "closed-form expected latency");
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo estimates at one gamma");
    CLI::App* optimize = app.add_subcommand("optimize-hybrid", "exhaustive hybrid parameter search");
    CLI::App* sweep = app.add_subcommand("sweep", "scheme latency across a gamma grid");
    CLI::App* verify = app.add_subcommand("verify", "finite-field decodability checks");
    for (CLI::App* cmd : {analyze, simulate, optimize, sweep, verify}) add_common(cmd, f);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        const RunConfig rc = build_run_config(f);
        if (analyze->parsed()) return cmd_analyze(rc, std::cout);
        if (simulate->parsed()) return cmd_simulate(rc, std::cout);
        if (optimize->parsed()) return cmd_optimize_hybrid(rc, std::cout);
        if (sweep->parsed()) return cmd_sweep(rc, std::cout);
        return cmd_verify(rc, std::cout);
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfigError;
    } catch (const InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIoError;
    }
}
