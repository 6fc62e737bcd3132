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
#include "edgecode/analytic.hpp"

#include <stdexcept>

namespace edgecode {

double harmonic(int K) {
    if (K < 0) throw std::domain_error("harmonic: K must be >= 0");
    double h = 0.0;
    for (int k = 1; k <= K; ++k) h += 1.0 / k;
    return h;
}

double expected_order_stat(int K, int q, double eta) {
    if (q < 1 || q > K) throw std::domain_error("expected_order_stat: need 1 <= q <= K");
    if (!(eta > 0.0)) throw std::domain_error("expected_order_stat: eta must be > 0");
    return (harmonic(K) - harmonic(K - q)) / eta;
}

}  // namespace edgecode
