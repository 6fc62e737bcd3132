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
#ifndef EDGECODE_GF_FIELD_HPP
#define EDGECODE_GF_FIELD_HPP

#include <cstdint>
#include <vector>

namespace edgecode::gf {

using sym_t = std::uint16_t;

/// GF(2^L) arithmetic over log/antilog tables, L in {4, 8, 16}.
///
/// Reduction polynomials are fixed published ones so tables are identical
/// across builds:
///   L=4:  x^4 + x + 1
///   L=8:  x^8 + x^4 + x^3 + x + 1
///   L=16: x^16 + x^12 + x^3 + x + 1
/// The generator used for the tables is the smallest primitive element of
/// each field (3 for L=8, where x itself is not primitive).
class Field {
public:
    static const Field& of(int bits);  // cached instance per supported L

    int bits() const { return bits_; }
    std::uint32_t order() const { return order_; }  // 2^L
    std::uint32_t poly() const { return poly_; }

    sym_t add(sym_t a, sym_t b) const { return a ^ b; }

    sym_t mul(sym_t a, sym_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];  // exp table doubled, no modulo
    }

    sym_t inv(sym_t a) const;
    sym_t div(sym_t a, sym_t b) const { return mul(a, inv(b)); }
    sym_t pow(sym_t a, std::uint64_t e) const;

    const std::uint32_t* log_table() const { return log_.data(); }

private:
    Field(int bits, std::uint32_t poly);

    int bits_;
    std::uint32_t order_;
    std::uint32_t poly_;
    std::vector<sym_t> exp_;  // 2*(order-1) entries
    std::vector<std::uint32_t> log_;
};

/// Reference product by shift-and-xor reduction, no tables. Slow; exists so
/// the table arithmetic has an independent check.
sym_t clmul_mod(sym_t a, sym_t b, std::uint32_t poly, int bits);

}  // namespace edgecode::gf

#endif
