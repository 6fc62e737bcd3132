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
#ifndef EDGECODE_ERRORS_HPP
#define EDGECODE_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace edgecode {

/// Invalid system configuration. Carries every violated constraint so a
/// caller can report all of them at once.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(std::vector<std::string> problems)
        : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

    const std::vector<std::string>& problems() const { return problems_; }

private:
    static std::string join(const std::vector<std::string>& ps) {
        std::string s = "invalid configuration:";
        for (const auto& p : ps) {
            s += "\n  - ";
            s += p;
        }
        return s;
    }
    std::vector<std::string> problems_;
};

/// A scheme cannot complete on the given inputs (e.g. a schedule that does
/// not cover all rows, or a redundancy profile short of m distinct values).
class InfeasibleError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace edgecode

#endif
