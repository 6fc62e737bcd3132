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
#ifndef EDGECODE_GF_ORACLE_HPP
#define EDGECODE_GF_ORACLE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "edgecode/config.hpp"
#include "edgecode/gf/matrix.hpp"
#include "edgecode/latency.hpp"
#include "edgecode/schedule.hpp"

namespace edgecode::gf {

/// Exact decodability check of the latency model's stopping rules: builds
/// the scheme's real coding matrix, replays the stopping decision on a
/// straggler sample, and verifies by rank and by decoding that the computed
/// values determine every output.

/// Coding matrix a scheme stores rows of (identity for the uncoded scheme).
SymMatrix scheme_generator(const SystemConfig& config, const SchemeSpec& spec);

/// Indices of the coded rows whose values exist once the scheme's stopping
/// rule fires on this sample (deduplicated, ascending).
std::vector<int> computed_rows_at_stop(const SystemConfig& config,
                                       const SchemeSpec& spec,
                                       const Schedule& schedule,
                                       const StragglerSample& sample);

struct VerifyFailure {
    std::string scheme;
    std::uint64_t seed = 0;
    std::string reason;
    std::vector<int> computed_rows;
};

struct VerifyReport {
    struct SchemeLine {
        std::string label;
        int passed = 0;
        int total = 0;
    };
    std::vector<SchemeLine> lines;
    std::vector<VerifyFailure> failures;
    bool negative_control_failed_as_expected = false;

    bool all_passed() const;
};

/// Runs `samples` random straggler draws per scheme at small scale, checking
/// for each that the computed rows at the stopping time are decodable (rank,
/// then an actual decode against a plain product), that the uncoded stop is
/// minimal (infeasible one event earlier), and that a deliberately
/// non-covering uncoded schedule is reported infeasible. Hybrid checks cover
/// every enumerated parameter set. Enforces K <= 8, m <= 24.
VerifyReport run_verify_suite(const SystemConfig& config, int samples,
                              std::uint64_t base_seed);

}  // namespace edgecode::gf

#endif
