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
#include "edgecode/gf/matrix.hpp"

#include <string>
#include <utility>

#include "edgecode/errors.hpp"
#include "edgecode/gf/kernels.hpp"

namespace edgecode::gf {

SymMatrix mds_generator(int mprime, int m, int bits) {
    const Field& field = Field::of(bits);
    if (mprime > static_cast<int>(field.order()))
        throw ConfigError({"code length " + std::to_string(mprime) +
                           " exceeds field size 2^" + std::to_string(bits) +
                           "; distinct evaluation points run out"});
    SymMatrix G(mprime, m);
    for (int i = 0; i < mprime; ++i) {
        const sym_t a = static_cast<sym_t>(i);
        sym_t p = 1;
        for (int j = 0; j < m; ++j) {
            G.at(i, j) = p;
            p = field.mul(p, a);
        }
    }
    return G;
}

SymMatrix identity_matrix(int m) {
    SymMatrix I(m, m);
    for (int i = 0; i < m; ++i) I.at(i, i) = 1;
    return I;
}

SymMatrix encode_model(const Field& field, const SymMatrix& G, const SymMatrix& W) {
    SymMatrix C(G.rows(), W.cols());
    for (std::size_t i = 0; i < G.rows(); ++i)
        for (std::size_t j = 0; j < G.cols(); ++j)
            kernels::mul_row_add(field, C.row(i), W.row(j), W.cols(), G.at(i, j));
    return C;
}

namespace {

// Row-reduces M in place, returning its rank. Companion, if non-null, gets
// the same row operations (used to carry right-hand sides through a solve).
std::size_t eliminate(const Field& field, SymMatrix& M, SymMatrix* companion) {
    const std::size_t rows = M.rows();
    const std::size_t cols = M.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && M.at(pivot, col) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(M.at(pivot, j), M.at(rank, j));
            if (companion)
                for (std::size_t j = 0; j < companion->cols(); ++j)
                    std::swap(companion->at(pivot, j), companion->at(rank, j));
        }
        const sym_t scale = field.inv(M.at(rank, col));
        kernels::scale_row(field, M.row(rank), cols, scale);
        if (companion)
            kernels::scale_row(field, companion->row(rank), companion->cols(), scale);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const sym_t f = M.at(r, col);
            if (f == 0) continue;
            kernels::mul_row_add(field, M.row(r), M.row(rank), cols, f);
            if (companion)
                kernels::mul_row_add(field, companion->row(r), companion->row(rank),
                                     companion->cols(), f);
        }
        ++rank;
    }
    return rank;
}

SymMatrix take_rows(const SymMatrix& G, const std::vector<int>& row_indices) {
    SymMatrix S(row_indices.size(), G.cols());
    for (std::size_t i = 0; i < row_indices.size(); ++i) {
        const sym_t* src = G.row(static_cast<std::size_t>(row_indices[i]));
        for (std::size_t j = 0; j < G.cols(); ++j) S.at(i, j) = src[j];
    }
    return S;
}

}  // namespace

std::size_t rank_of_rows(const Field& field, const SymMatrix& G,
                         const std::vector<int>& row_indices) {
    SymMatrix S = take_rows(G, row_indices);
    return eliminate(field, S, nullptr);
}

bool feasible(const Field& field, const std::vector<int>& computed_rows,
              const SymMatrix& G) {
    return rank_of_rows(field, G, computed_rows) == G.cols();
}

SymMatrix decode_outputs(const Field& field, const std::vector<int>& computed_rows,
                         const SymMatrix& G, const SymMatrix& ivs) {
    SymMatrix S = take_rows(G, computed_rows);
    SymMatrix rhs = ivs;
    const std::size_t rank = eliminate(field, S, &rhs);
    if (rank != G.cols())
        throw InfeasibleError("decode: computed rows span rank " +
                              std::to_string(rank) + " of " +
                              std::to_string(G.cols()));
    // After full reduction row r of S is the unit vector e_r for r < rank,
    // so the first rank rows of rhs are Y in order.
    SymMatrix Y(G.cols(), ivs.cols());
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t j = 0; j < ivs.cols(); ++j) Y.at(r, j) = rhs.at(r, j);
    return Y;
}

SymMatrix naive_mul(const Field& field, const SymMatrix& A, const SymMatrix& B) {
    SymMatrix C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) {
            sym_t acc = 0;
            for (std::size_t k = 0; k < A.cols(); ++k)
                acc = field.add(acc, field.mul(A.at(i, k), B.at(k, j)));
            C.at(i, j) = acc;
        }
    return C;
}

}  // namespace edgecode::gf
