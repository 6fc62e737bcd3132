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
#ifndef EDGECODE_CLI_HPP
#define EDGECODE_CLI_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "edgecode/config.hpp"
#include "edgecode/latency.hpp"

namespace edgecode::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;
inline constexpr int kExitVerifyFailure = 4;

/// Everything a subcommand needs: system parameters plus run options.
struct RunConfig {
    SystemConfig system;
    std::vector<Scheme> schemes = {Scheme::kUncoded, Scheme::kCoded, Scheme::kHybrid};
    std::vector<double> gamma_grid;
    long long trials = 10000;
    std::uint64_t seed = 1;
    std::string out_path;
    std::optional<HybridParams> hybrid;  // explicit hybrid parameters
    int verify_samples = 100;
    std::string trace_path;  // optional per-trial latency dump
};

/// Value of one system-config key as parsed from JSON or a flag. Strings
/// allow exact fractions like "1/3" for mu.
struct ConfigOverride {
    std::string key;
    std::string value;
};

/// Loads defaults, then the JSON file (if any), then flag overrides, and
/// validates. Collects every problem into a single ConfigError.
SystemConfig load_system_config(const std::string& config_path,
                                const std::vector<ConfigOverride>& overrides);

/// Parses "start:stop:step" into an inclusive grid.
std::vector<double> parse_gamma_grid(const std::string& text);

/// Parses a decimal or "p/q" fraction.
double parse_ratio(const std::string& text);

int cmd_analyze(const RunConfig& rc, std::ostream& out);
int cmd_simulate(const RunConfig& rc, std::ostream& out);
int cmd_optimize_hybrid(const RunConfig& rc, std::ostream& out);
int cmd_sweep(const RunConfig& rc, std::ostream& out);
int cmd_verify(const RunConfig& rc, std::ostream& out);

}  // namespace edgecode::cli

#endif
