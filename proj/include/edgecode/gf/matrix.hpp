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
#ifndef EDGECODE_GF_MATRIX_HPP
#define EDGECODE_GF_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "edgecode/gf/field.hpp"

namespace edgecode::gf {

/// Dense row-major matrix of field symbols.
class SymMatrix {
public:
    SymMatrix() = default;
    SymMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    sym_t* row(std::size_t i) { return data_.data() + i * cols_; }
    const sym_t* row(std::size_t i) const { return data_.data() + i * cols_; }

    sym_t& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    sym_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const SymMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<sym_t> data_;
};

/// Vandermonde generator of an (mprime, m) erasure code: row i is
/// [1, a_i, a_i^2, ..., a_i^(m-1)] with a_i the field element of value i.
/// Distinct evaluation points make every m-row submatrix invertible, which
/// needs mprime <= 2^L; throws ConfigError otherwise.
SymMatrix mds_generator(int mprime, int m, int bits);

SymMatrix identity_matrix(int m);

/// Coded rows G*W. With G the identity this is W itself.
SymMatrix encode_model(const Field& field, const SymMatrix& G, const SymMatrix& W);

/// Rank over the field of the submatrix of G restricted to the given rows.
std::size_t rank_of_rows(const Field& field, const SymMatrix& G,
                         const std::vector<int>& row_indices);

/// True iff the computed rows pin down every model row: the selected
/// submatrix of G has full column rank m. For a linear code this is exactly
/// the condition that nothing about the outputs remains uncertain.
bool feasible(const Field& field, const std::vector<int>& computed_rows,
              const SymMatrix& G);

/// Given the computed values ivs (one row per entry of computed_rows, each
/// a row of G*W*X), solves for Y = W*X. Requires feasible() to hold; throws
/// InfeasibleError otherwise.
SymMatrix decode_outputs(const Field& field, const std::vector<int>& computed_rows,
                         const SymMatrix& G, const SymMatrix& ivs);

/// Plain triple-loop product, used as the decode oracle's ground truth.
SymMatrix naive_mul(const Field& field, const SymMatrix& A, const SymMatrix& B);

}  // namespace edgecode::gf

#endif
