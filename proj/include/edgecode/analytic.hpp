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
#ifndef EDGECODE_ANALYTIC_HPP
#define EDGECODE_ANALYTIC_HPP

namespace edgecode {

/// K-th harmonic number, H_0 = 0.
double harmonic(int K);

/// Expected value of the q-th smallest of K i.i.d. exponential(eta)
/// variables: (H_K - H_{K-q}) / eta. Requires 1 <= q <= K.
double expected_order_stat(int K, int q, double eta);

}  // namespace edgecode

#endif
