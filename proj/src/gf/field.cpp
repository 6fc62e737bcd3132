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
#include "edgecode/gf/field.hpp"

#include <stdexcept>
#include <string>

#include "edgecode/errors.hpp"

namespace edgecode::gf {

sym_t clmul_mod(sym_t a, sym_t b, std::uint32_t poly, int bits) {
    std::uint32_t acc = 0;
    std::uint32_t aa = a;
    std::uint32_t bb = b;
    const std::uint32_t high = 1u << bits;
    while (bb) {
        if (bb & 1u) acc ^= aa;
        bb >>= 1;
        aa <<= 1;
        if (aa & high) aa ^= poly;
    }
    return static_cast<sym_t>(acc);
}

namespace {

// Multiplicative order of g divides 2^bits - 1; g is primitive iff no proper
// divisor d of 2^bits - 1 has g^d = 1.
bool is_primitive(std::uint32_t g, std::uint32_t poly, int bits) {
    const std::uint32_t n = (1u << bits) - 1;
    std::uint32_t x = 1;
    for (std::uint32_t i = 1; i < n; ++i) {
        x = clmul_mod(static_cast<sym_t>(x), static_cast<sym_t>(g), poly, bits);
        if (x == 1) return false;
    }
    x = clmul_mod(static_cast<sym_t>(x), static_cast<sym_t>(g), poly, bits);
    return x == 1;
}

std::uint32_t smallest_primitive(std::uint32_t poly, int bits) {
    for (std::uint32_t g = 2; g < (1u << bits); ++g)
        if (is_primitive(g, poly, bits)) return g;
    throw std::logic_error("no primitive element found; polynomial not primitive?");
}

}  // namespace

Field::Field(int bits, std::uint32_t poly)
    : bits_(bits), order_(1u << bits), poly_(poly) {
    const std::uint32_t n = order_ - 1;
    exp_.assign(2 * n, 0);
    log_.assign(order_, 0);

    const std::uint32_t g = smallest_primitive(poly, bits);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = static_cast<sym_t>(x);
        exp_[i + n] = static_cast<sym_t>(x);
        log_[x] = i;
        x = clmul_mod(static_cast<sym_t>(x), static_cast<sym_t>(g), poly, bits);
    }
}

const Field& Field::of(int bits) {
    switch (bits) {
        case 4: {
            static const Field f(4, 0x13);
            return f;
        }
        case 8: {
            static const Field f(8, 0x11B);
            return f;
        }
        case 16: {
            static const Field f(16, 0x1100B);
            return f;
        }
        default:
            throw ConfigError({"unsupported field width L=" + std::to_string(bits) +
                               " (choose 4, 8, or 16)"});
    }
}

sym_t Field::inv(sym_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const std::uint32_t n = order_ - 1;
    return exp_[n - log_[a]];
}

sym_t Field::pow(sym_t a, std::uint64_t e) const {
    const std::uint32_t n = order_ - 1;
    if (a == 0) return e == 0 ? sym_t{1} : sym_t{0};
    const std::uint64_t r = (static_cast<std::uint64_t>(log_[a]) * (e % n)) % n;
    return exp_[r];
}

}  // namespace edgecode::gf
