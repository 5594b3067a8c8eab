// SPDX-License-Identifier: Apache-2.0
//
// iasim - link-level simulator for IA-based cognitive relay networks
// Copyright (C) 2026 The iasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IASIM_MATRIX_HPP
#define IASIM_MATRIX_HPP

#include <boost/container/small_vector.hpp>

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace iasim {

using cplx = std::complex<double>;

/// Condition estimates above this value are treated as singular.
inline constexpr double kSingularCondition = 1e8;

/// Relative threshold (against the largest pivot) below which a direction counts as null.
inline constexpr double kNullTolerance = 1e-10;

/// Dense complex matrix with row-major storage.
///
/// Sized for the small systems of the simulator (2x2 up to ~16x16). Matrices up to 2x2
/// live inline without heap allocation.
class ComplexMatrix {
public:
    /// Zero matrix. Both dimensions must be at least one.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Row-major entries; throws ContractViolation on a size mismatch or a non-finite entry.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const cplx> row_major);

    /// Nested initializer, e.g. `ComplexMatrix::from_rows({{1, 0}, {0, 1}})`.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<cplx>> rows);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix column(std::span<const cplx> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool is_square() const noexcept { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<cplx> entries() noexcept { return {data_.data(), data_.size()}; }
    std::span<const cplx> entries() const noexcept { return {data_.data(), data_.size()}; }

    /// Copy of column `c` as an rows x 1 matrix.
    ComplexMatrix col(std::size_t c) const;
    /// Columns [first, first + count).
    ComplexMatrix cols_range(std::size_t first, std::size_t count) const;

    bool all_finite() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cplx scale) noexcept;

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) noexcept;

private:
    std::size_t rows_;
    std::size_t cols_;
    boost::container::small_vector<cplx, 4> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx scale, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

struct EigenDecomposition {
    std::vector<cplx> values;
    ComplexMatrix vectors; // unit-norm eigenvectors as columns, same order as values
};

/// Thin singular value decomposition a = u * diag(s) * v^H, s sorted descending.
struct SingularValueDecomposition {
    ComplexMatrix u; // rows x k
    std::vector<double> s;
    ComplexMatrix v; // cols x k
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conj_transpose(const ComplexMatrix& a);

/// Inverse of a square, well-conditioned matrix. Throws SingularMatrixError when
/// cond_estimate(a) exceeds kSingularCondition.
ComplexMatrix inverse(const ComplexMatrix& a);

/// Eigenpairs of a general square matrix, ordered by descending |lambda|, ties broken by
/// descending real part and then descending imaginary part.
EigenDecomposition eig(const ComplexMatrix& a);

/// Orthonormal basis (as columns) of {x : a x = 0}. Throws EmptyNullspaceError when a has
/// full column rank.
ComplexMatrix nullspace(const ComplexMatrix& a);

/// One-sided Jacobi SVD. Left vectors belonging to zero singular values are zero columns.
SingularValueDecomposition svd(const ComplexMatrix& a);

double fro_norm(const ComplexMatrix& a) noexcept;
double fro_norm_sq(const ComplexMatrix& a) noexcept;

/// sigma_max / sigma_min of a square matrix; +inf when exactly singular.
double cond_estimate(const ComplexMatrix& a);

cplx trace(const ComplexMatrix& a);

/// a scaled so that trace(a a^H) = 1. Throws ContractViolation for the zero matrix.
ComplexMatrix normalized(const ComplexMatrix& a);

} // namespace iasim

#endif
