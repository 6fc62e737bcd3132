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
#include "edgecode/gf/kernels.hpp"

namespace edgecode::gf::kernels {

void mul_row_add_scalar(const Field& field, sym_t* dst, const sym_t* src,
                        std::size_t n, sym_t coeff) {
    if (coeff == 0) return;
    if (coeff == 1) {
        for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= field.mul(coeff, src[i]);
}

namespace {

bool want_avx2_for(const Field& field) {
#if defined(EDGECODE_HAVE_AVX2)
    static const bool cpu_ok = __builtin_cpu_supports("avx2");
    return cpu_ok && field.bits() == 8;
#else
    (void)field;
    return false;
#endif
}

}  // namespace

void mul_row_add(const Field& field, sym_t* dst, const sym_t* src,
                 std::size_t n, sym_t coeff) {
#if defined(EDGECODE_HAVE_AVX2)
    if (want_avx2_for(field)) {
        mul_row_add_avx2(field, dst, src, n, coeff);
        return;
    }
#endif
    mul_row_add_scalar(field, dst, src, n, coeff);
}

void scale_row(const Field& field, sym_t* dst, std::size_t n, sym_t coeff) {
    if (coeff == 1) return;
    for (std::size_t i = 0; i < n; ++i) dst[i] = field.mul(coeff, dst[i]);
}

const char* active_kernel(const Field& field) {
    return want_avx2_for(field) ? "avx2" : "scalar";
}

}  // namespace edgecode::gf::kernels
