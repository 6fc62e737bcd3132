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
#ifndef EDGECODE_GF_KERNELS_HPP
#define EDGECODE_GF_KERNELS_HPP

#include <cstddef>

#include "edgecode/gf/field.hpp"

namespace edgecode::gf::kernels {

// Row primitives behind encode and elimination: dst[i] ^= coeff * src[i].
// The scalar kernel is the reference for every field; for GF(2^8) an AVX2
// nibble-table variant exists and is picked at runtime when the CPU has it.
// Both produce identical output (equivalence-tested).

void mul_row_add_scalar(const Field& field, sym_t* dst, const sym_t* src,
                        std::size_t n, sym_t coeff);

#if defined(EDGECODE_HAVE_AVX2)
// GF(2^8) only; caller guarantees field.bits() == 8.
void mul_row_add_avx2(const Field& field, sym_t* dst, const sym_t* src,
                      std::size_t n, sym_t coeff);
#endif

/// Dispatched entry point.
void mul_row_add(const Field& field, sym_t* dst, const sym_t* src,
                 std::size_t n, sym_t coeff);

/// Scales a row in place: dst[i] = coeff * dst[i].
void scale_row(const Field& field, sym_t* dst, std::size_t n, sym_t coeff);

/// Name of the kernel mul_row_add would use for this field ("scalar" or
/// "avx2"); exposed for tests and diagnostics.
const char* active_kernel(const Field& field);

}  // namespace edgecode::gf::kernels

#endif
