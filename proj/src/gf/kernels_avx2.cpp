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

#if defined(EDGECODE_HAVE_AVX2)

#include <immintrin.h>

namespace edgecode::gf::kernels {

// GF(2^8) multiply-accumulate via two 16-entry nibble tables: for symbol
// x = hi*16 + lo, coeff*x = T_lo[lo] ^ T_hi[hi]. Symbols sit in the low
// byte of each 16-bit lane; the high byte is zero and both its nibble
// lookups hit table entry 0 = 0, so byte-wise shuffles leave it zero.
void mul_row_add_avx2(const Field& field, sym_t* dst, const sym_t* src,
                      std::size_t n, sym_t coeff) {
    if (coeff == 0) return;

    alignas(16) unsigned char lo_tab[16];
    alignas(16) unsigned char hi_tab[16];
    for (int i = 0; i < 16; ++i) {
        lo_tab[i] = static_cast<unsigned char>(field.mul(coeff, static_cast<sym_t>(i)));
        hi_tab[i] = static_cast<unsigned char>(field.mul(coeff, static_cast<sym_t>(i << 4)));
    }
    const __m256i vlo =
        _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(lo_tab)));
    const __m256i vhi =
        _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(hi_tab)));
    const __m256i nib = _mm256_set1_epi8(0x0F);

    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        const __m256i x =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        const __m256i idx_lo = _mm256_and_si256(x, nib);
        const __m256i idx_hi = _mm256_and_si256(_mm256_srli_epi16(x, 4), nib);
        const __m256i prod = _mm256_xor_si256(_mm256_shuffle_epi8(vlo, idx_lo),
                                              _mm256_shuffle_epi8(vhi, idx_hi));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        d = _mm256_xor_si256(d, prod);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), d);
    }
    for (; i < n; ++i) dst[i] ^= field.mul(coeff, src[i]);
}

}  // namespace edgecode::gf::kernels

#endif  // EDGECODE_HAVE_AVX2
