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
#include "edgecode/config.hpp"

#include <cmath>
#include <cstdio>

#include "edgecode/errors.hpp"

namespace edgecode {

namespace {

// Tolerance for products like m*mu that must land on integers. mu arrives
// as a parsed double, so 1/3 etc. carry representation error.
constexpr double kIntTol = 1e-9;

bool near_integer(double x) { return std::fabs(x - std::round(x)) <= kIntTol * std::max(1.0, std::fabs(x)); }

std::string fmt(const char* pattern, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

}  // namespace

int SystemConfig::rows_per_en() const {
    return static_cast<int>(std::llround(static_cast<double>(m) * mu));
}

int SystemConfig::min_wait() const {
    // smallest q with q*mu >= 1, up to representation error
    return static_cast<int>(std::ceil((1.0 - kIntTol) / mu));
}

int SystemConfig::floor_k_mu() const {
    return static_cast<int>(std::floor(static_cast<double>(K) * mu + kIntTol));
}

std::vector<std::string> SystemConfig::validate() const {
    std::vector<std::string> problems;
    if (K < 1) problems.push_back("K must be >= 1");
    if (N < 1) problems.push_back("N must be >= 1");
    if (m < 1) problems.push_back("m must be >= 1");
    if (!(tau > 0.0)) problems.push_back("tau must be > 0");
    if (!(eta > 0.0)) problems.push_back("eta must be > 0");
    if (gamma < 0.0) problems.push_back("gamma must be >= 0");
    if (K >= 1) {
        double lo = 1.0 / static_cast<double>(K);
        if (mu < lo - kIntTol || mu > 1.0 + kIntTol)
            problems.push_back(fmt("mu=%g outside [1/K, 1] = [%g, 1]", mu, lo));
    }
    if (m >= 1 && !near_integer(static_cast<double>(m) * mu))
        problems.push_back(fmt("m*mu = %g is not an integer (m=%g rows cannot be stored fractionally)",
                               static_cast<double>(m) * mu, static_cast<double>(m)));
    if (L != 4 && L != 8 && L != 16) problems.push_back("L must be one of 4, 8, 16");
    return problems;
}

void SystemConfig::ensure_valid() const {
    auto problems = validate();
    if (!problems.empty()) throw ConfigError(std::move(problems));
}

}  // namespace edgecode
