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

#include "iasim/matrix.hpp"

#include "iasim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace iasim {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string dims(const ComplexMatrix& a)
{
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

void require_square(const ComplexMatrix& a, const char* op)
{
    if (!a.is_square())
        throw ContractViolation(std::string(op) + ": expected a square matrix, got " + dims(a));
}

double abs2(cplx z) noexcept
{
    return std::norm(z);
}

// Ordering used for eigenpairs: descending |lambda|, then real part, then imaginary part.
bool eigen_before(cplx x, cplx y) noexcept
{
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    if (ax != ay)
        return ax > ay;
    if (x.real() != y.real())
        return x.real() > y.real();
    return x.imag() > y.imag();
}

EigenDecomposition sort_pairs(std::vector<cplx> values, const ComplexMatrix& vectors)
{
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return eigen_before(values[i], values[j]); });

    EigenDecomposition out{std::vector<cplx>(n), ComplexMatrix(vectors.rows(), n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = values[order[k]];
        for (std::size_t r = 0; r < vectors.rows(); ++r)
            out.vectors(r, k) = vectors(r, order[k]);
    }
    return out;
}

void normalize_columns(ComplexMatrix& v)
{
    for (std::size_t c = 0; c < v.cols(); ++c) {
        double s = 0.0;
        for (std::size_t r = 0; r < v.rows(); ++r)
            s += abs2(v(r, c));
        s = std::sqrt(s);
        if (s == 0.0)
            continue;
        for (std::size_t r = 0; r < v.rows(); ++r)
            v(r, c) /= s;
    }
}

EigenDecomposition eig2x2(const ComplexMatrix& m)
{
    const cplx a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
    const cplx tr = a + d;
    const cplx det = a * d - b * c;

    cplx root = std::sqrt(tr * tr - 4.0 * det);
    if (std::abs(tr + root) < std::abs(tr - root))
        root = -root;
    const cplx l1 = 0.5 * (tr + root);
    const cplx l2 = (l1 != cplx{}) ? det / l1 : 0.5 * (tr - root);

    const double scale = std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
    auto vector_for = [&](cplx lambda, std::size_t fallback) {
        // Both rows of (m - lambda I) annihilate the eigenvector; take the better-scaled one.
        cplx x1{b}, y1{lambda - a};
        cplx x2{lambda - d}, y2{c};
        const double n1 = abs2(x1) + abs2(y1);
        const double n2 = abs2(x2) + abs2(y2);
        if (std::max(n1, n2) <= (kEps * scale) * (kEps * scale) || scale == 0.0) {
            // m is (numerically) lambda * I: every vector is an eigenvector.
            return fallback == 0 ? std::pair<cplx, cplx>{1.0, 0.0} : std::pair<cplx, cplx>{0.0, 1.0};
        }
        return n1 >= n2 ? std::pair<cplx, cplx>{x1, y1} : std::pair<cplx, cplx>{x2, y2};
    };

    ComplexMatrix vecs(2, 2);
    const auto [x1, y1] = vector_for(l1, 0);
    const auto [x2, y2] = vector_for(l2, 1);
    vecs(0, 0) = x1;
    vecs(1, 0) = y1;
    vecs(0, 1) = x2;
    vecs(1, 1) = y2;
    normalize_columns(vecs);
    return sort_pairs({l1, l2}, vecs);
}

// Householder reflector mapping x onto alpha * e1. Returns false when x is zero.
bool householder(std::vector<cplx>& x, cplx& alpha)
{
    double norm = 0.0;
    for (const cplx& v : x)
        norm += abs2(v);
    norm = std::sqrt(norm);
    if (norm == 0.0)
        return false;
    const double a0 = std::abs(x[0]);
    const cplx phase = a0 == 0.0 ? cplx{1.0} : x[0] / a0;
    alpha = -phase * norm;
    x[0] -= alpha;
    double vnorm = 0.0;
    for (const cplx& v : x)
        vnorm += abs2(v);
    vnorm = std::sqrt(vnorm);
    for (cplx& v : x)
        v /= vnorm;
    return true;
}

// Complex Schur form by Hessenberg reduction and single-shift QR. On return t is upper
// triangular and q unitary with a = q t q^H.
void schur(ComplexMatrix& t, ComplexMatrix& q)
{
    const std::size_t n = t.rows();
    q = ComplexMatrix::identity(n);

    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::vector<cplx> v(n - k - 1);
        for (std::size_t i = k + 1; i < n; ++i)
            v[i - k - 1] = t(i, k);
        cplx alpha;
        if (!householder(v, alpha))
            continue;
        // t <- H t H, q <- q H with H = I - 2 v v^H acting on rows/cols k+1..n-1.
        for (std::size_t c = 0; c < n; ++c) {
            cplx s{};
            for (std::size_t i = k + 1; i < n; ++i)
                s += std::conj(v[i - k - 1]) * t(i, c);
            for (std::size_t i = k + 1; i < n; ++i)
                t(i, c) -= 2.0 * v[i - k - 1] * s;
        }
        for (ComplexMatrix* m : {&t, &q}) {
            for (std::size_t r = 0; r < n; ++r) {
                cplx s{};
                for (std::size_t i = k + 1; i < n; ++i)
                    s += (*m)(r, i) * v[i - k - 1];
                for (std::size_t i = k + 1; i < n; ++i)
                    (*m)(r, i) -= 2.0 * s * std::conj(v[i - k - 1]);
            }
        }
        for (std::size_t i = k + 2; i < n; ++i)
            t(i, k) = 0.0;
    }

    std::size_t hi = n - 1;
    std::size_t iterations = 0;
    const std::size_t max_iterations = 60 * n;
    while (hi > 0) {
        // Locate the active unreduced block [lo, hi].
        std::size_t lo = hi;
        while (lo > 0) {
            const double sub = std::abs(t(lo, lo - 1));
            const double diag = std::abs(t(lo, lo)) + std::abs(t(lo - 1, lo - 1));
            if (sub <= kEps * diag || sub < std::numeric_limits<double>::min()) {
                t(lo, lo - 1) = 0.0;
                break;
            }
            --lo;
        }
        if (lo == hi) {
            --hi;
            iterations = 0;
            continue;
        }
        if (++iterations > max_iterations)
            throw NumericFailure("eig: QR iteration did not converge");

        // Wilkinson shift from the trailing 2x2 block.
        const cplx a = t(hi - 1, hi - 1), b = t(hi - 1, hi), c = t(hi, hi - 1), d = t(hi, hi);
        const cplx tr = a + d;
        const cplx root = std::sqrt((a - d) * (a - d) + 4.0 * b * c);
        const cplx mu1 = 0.5 * (tr + root);
        const cplx mu2 = 0.5 * (tr - root);
        cplx shift = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
        if (iterations % 11 == 0) // exceptional shift to break cycles
            shift = d + std::abs(t(hi, hi - 1));

        // Implicit single-shift QR sweep with Givens rotations (bulge chase).
        cplx x = t(lo, lo) - shift;
        cplx y = t(lo + 1, lo);
        for (std::size_t k = lo; k < hi; ++k) {
            const double r = std::hypot(std::abs(x), std::abs(y));
            const cplx cs = r == 0.0 ? cplx{1.0} : x / r;
            const cplx sn = r == 0.0 ? cplx{} : y / r;
            // G = [[conj(cs), conj(sn)], [-sn, cs]] applied to rows k, k+1.
            const std::size_t c0 = k > lo ? k - 1 : lo;
            for (std::size_t j = c0; j < n; ++j) {
                const cplx u = t(k, j), w = t(k + 1, j);
                t(k, j) = std::conj(cs) * u + std::conj(sn) * w;
                t(k + 1, j) = -sn * u + cs * w;
            }
            const std::size_t r1 = std::min(k + 2, hi);
            for (std::size_t i = 0; i <= r1; ++i) {
                const cplx u = t(i, k), w = t(i, k + 1);
                t(i, k) = u * cs + w * sn;
                t(i, k + 1) = -u * std::conj(sn) + w * std::conj(cs);
            }
            for (std::size_t i = 0; i < n; ++i) {
                const cplx u = q(i, k), w = q(i, k + 1);
                q(i, k) = u * cs + w * sn;
                q(i, k + 1) = -u * std::conj(sn) + w * std::conj(cs);
            }
            if (k + 1 < hi) {
                x = t(k + 1, k);
                y = t(k + 2, k);
                if (k > lo)
                    t(k + 1, k - 1) = 0.0;
            }
        }
        if (hi >= lo + 2)
            t(hi, hi - 2) = 0.0;
    }
}

EigenDecomposition eig_general(const ComplexMatrix& a)
{
    const std::size_t n = a.rows();
    ComplexMatrix t = a;
    ComplexMatrix q(n, n);
    schur(t, q);

    double tnorm = 0.0;
    for (const cplx& z : t.entries())
        tnorm = std::max(tnorm, std::abs(z));
    const double smin = std::max(kEps * tnorm, std::numeric_limits<double>::min());

    std::vector<cplx> values(n);
    ComplexMatrix y(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const cplx lambda = t(k, k);
        values[k] = lambda;
        y(k, k) = 1.0;
        for (std::size_t ii = k; ii-- > 0;) {
            cplx s{};
            for (std::size_t j = ii + 1; j <= k; ++j)
                s += t(ii, j) * y(j, k);
            cplx denom = t(ii, ii) - lambda;
            if (std::abs(denom) < smin)
                denom = smin;
            y(ii, k) = -s / denom;
        }
    }
    ComplexMatrix vectors = matmul(q, y);
    normalize_columns(vectors);
    return sort_pairs(std::move(values), vectors);
}

// One-sided Jacobi on the columns of a (rows >= cols).
SingularValueDecomposition svd_tall(const ComplexMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    ComplexMatrix w = a;
    ComplexMatrix v = ComplexMatrix::identity(n);

    const std::size_t max_sweeps = 80;
    bool converged = n < 2;
    for (std::size_t sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t qc = p + 1; qc < n; ++qc) {
                double alpha = 0.0, beta = 0.0;
                cplx gamma{};
                for (std::size_t r = 0; r < m; ++r) {
                    alpha += abs2(w(r, p));
                    beta += abs2(w(r, qc));
                    gamma += std::conj(w(r, p)) * w(r, qc);
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= kEps * std::sqrt(alpha * beta))
                    continue;
                converged = false;
                const cplx phase = gamma / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double tt = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + tt * tt);
                const double sn = cs * tt;
                auto rotate = [&](ComplexMatrix& mat) {
                    for (std::size_t r = 0; r < mat.rows(); ++r) {
                        const cplx xp = mat(r, p);
                        const cplx xq = mat(r, qc) * std::conj(phase);
                        mat(r, p) = cs * xp - sn * xq;
                        mat(r, qc) = sn * xp + cs * xq;
                    }
                };
                rotate(w);
                rotate(v);
            }
        }
    }
    if (!converged)
        throw NumericFailure("svd: Jacobi sweeps did not converge");

    std::vector<double> s(n);
    for (std::size_t c = 0; c < n; ++c) {
        double acc = 0.0;
        for (std::size_t r = 0; r < m; ++r)
            acc += abs2(w(r, c));
        s[c] = std::sqrt(acc);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return s[i] > s[j]; });

    SingularValueDecomposition out{ComplexMatrix(m, n), std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.s[k] = s[src];
        for (std::size_t r = 0; r < m; ++r)
            out.u(r, k) = s[src] > 0.0 ? w(r, src) / s[src] : cplx{};
        for (std::size_t r = 0; r < n; ++r)
            out.v(r, k) = v(r, src);
    }
    return out;
}

// LU with partial pivoting; solves a x = b for every column of b in place.
ComplexMatrix lu_solve(const ComplexMatrix& a, ComplexMatrix b)
{
    const std::size_t n = a.rows();
    ComplexMatrix lu = a;
    std::vector<std::size_t> piv(n);
    std::iota(piv.begin(), piv.end(), 0);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(lu(i, k)) > std::abs(lu(p, k)))
                p = i;
        if (lu(p, k) == cplx{})
            throw SingularMatrixError("inverse: zero pivot");
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(lu(p, j), lu(k, j));
            std::swap(piv[p], piv[k]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            lu(i, k) /= lu(k, k);
            for (std::size_t j = k + 1; j < n; ++j)
                lu(i, j) -= lu(i, k) * lu(k, j);
        }
    }
    ComplexMatrix x(n, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        std::vector<cplx> z(n);
        for (std::size_t i = 0; i < n; ++i) {
            cplx s = b(piv[i], c);
            for (std::size_t j = 0; j < i; ++j)
                s -= lu(i, j) * z[j];
            z[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            cplx s = z[i];
            for (std::size_t j = i + 1; j < n; ++j)
                s -= lu(i, j) * x(j, c);
            x(i, c) = s / lu(i, i);
        }
    }
    return x;
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
    if (rows == 0 || cols == 0)
        throw ContractViolation("ComplexMatrix: dimensions must be at least 1x1");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const cplx> row_major)
    : ComplexMatrix(rows, cols)
{
    if (row_major.size() != rows * cols)
        throw ContractViolation("ComplexMatrix: expected " + std::to_string(rows * cols) + " entries, got "
                                + std::to_string(row_major.size()));
    std::copy(row_major.begin(), row_major.end(), data_.begin());
    if (!all_finite())
        throw ContractViolation("ComplexMatrix: non-finite entry");
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    std::vector<cplx> flat;
    flat.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c)
            throw ContractViolation("ComplexMatrix::from_rows: ragged rows");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return ComplexMatrix(r, c, flat);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> entries)
{
    return ComplexMatrix(entries.size(), 1, entries);
}

ComplexMatrix ComplexMatrix::col(std::size_t c) const
{
    return cols_range(c, 1);
}

ComplexMatrix ComplexMatrix::cols_range(std::size_t first, std::size_t count) const
{
    if (count == 0 || first + count > cols_)
        throw ContractViolation("ComplexMatrix::cols_range: out of range");
    ComplexMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c)
            out(r, c) = (*this)(r, first + c);
    return out;
}

bool ComplexMatrix::all_finite() const noexcept
{
    return std::all_of(data_.begin(), data_.end(),
                       [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ContractViolation("ComplexMatrix +: dimension mismatch " + dims(*this) + " vs " + dims(other));
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw ContractViolation("ComplexMatrix -: dimension mismatch " + dims(*this) + " vs " + dims(other));
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) noexcept
{
    for (cplx& z : data_)
        z *= scale;
    return *this;
}

bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) noexcept
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && std::equal(a.data_.begin(), a.data_.end(), b.data_.begin());
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b)
{
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b)
{
    a -= b;
    return a;
}

ComplexMatrix operator*(cplx scale, ComplexMatrix a)
{
    a *= scale;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b)
{
    return matmul(a, b);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.cols() != b.rows())
        throw ContractViolation("matmul: dimension mismatch " + dims(a) + " * " + dims(b));
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    return out;
}

ComplexMatrix conj_transpose(const ComplexMatrix& a)
{
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(j, i) = std::conj(a(i, j));
    return out;
}

ComplexMatrix inverse(const ComplexMatrix& a)
{
    require_square(a, "inverse");
    const double cond = cond_estimate(a);
    if (!(cond <= kSingularCondition))
        throw SingularMatrixError("inverse: condition estimate " + std::to_string(cond) + " exceeds threshold");
    const std::size_t n = a.rows();
    ComplexMatrix x = lu_solve(a, ComplexMatrix::identity(n));
    // One step of iterative refinement: x += a^-1 (I - a x).
    ComplexMatrix residual = ComplexMatrix::identity(n) - matmul(a, x);
    x += lu_solve(a, residual);
    return x;
}

EigenDecomposition eig(const ComplexMatrix& a)
{
    require_square(a, "eig");
    if (a.rows() == 1)
        return {{a(0, 0)}, ComplexMatrix::identity(1)};
    if (a.rows() == 2)
        return eig2x2(a);
    return eig_general(a);
}

SingularValueDecomposition svd(const ComplexMatrix& a)
{
    if (a.rows() >= a.cols())
        return svd_tall(a);
    SingularValueDecomposition t = svd_tall(conj_transpose(a));
    return {std::move(t.v), std::move(t.s), std::move(t.u)};
}

ComplexMatrix nullspace(const ComplexMatrix& a)
{
    // Householder QR with column pivoting of b = a^H; the trailing columns of Q span the
    // orthogonal complement of a's row space.
    ComplexMatrix b = conj_transpose(a);
    const std::size_t n = b.rows();
    const std::size_t m = b.cols();
    ComplexMatrix q = ComplexMatrix::identity(n);

    std::vector<double> colnorm(m, 0.0);
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t r = 0; r < n; ++r)
            colnorm[c] += abs2(b(r, c));

    const std::size_t steps = std::min(n, m);
    std::size_t rank = 0;
    double lead = 0.0;
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t p = k;
        for (std::size_t c = k + 1; c < m; ++c)
            if (colnorm[c] > colnorm[p])
                p = c;
        if (p != k) {
            for (std::size_t r = 0; r < n; ++r)
                std::swap(b(r, p), b(r, k));
            std::swap(colnorm[p], colnorm[k]);
        }
        std::vector<cplx> v(n - k);
        for (std::size_t r = k; r < n; ++r)
            v[r - k] = b(r, k);
        cplx alpha;
        const bool reflected = householder(v, alpha);
        const double pivot = reflected ? std::abs(alpha) : 0.0;
        if (k == 0)
            lead = pivot;
        if (pivot == 0.0 || pivot <= kNullTolerance * lead)
            break;
        ++rank;
        for (std::size_t c = k; c < m; ++c) {
            cplx s{};
            for (std::size_t r = k; r < n; ++r)
                s += std::conj(v[r - k]) * b(r, c);
            for (std::size_t r = k; r < n; ++r)
                b(r, c) -= 2.0 * v[r - k] * s;
        }
        for (std::size_t r = 0; r < n; ++r) {
            cplx s{};
            for (std::size_t i = k; i < n; ++i)
                s += q(r, i) * v[i - k];
            for (std::size_t i = k; i < n; ++i)
                q(r, i) -= 2.0 * s * std::conj(v[i - k]);
        }
        for (std::size_t c = k + 1; c < m; ++c) {
            colnorm[c] = 0.0;
            for (std::size_t r = k + 1; r < n; ++r)
                colnorm[c] += abs2(b(r, c));
        }
    }
    if (rank == n)
        throw EmptyNullspaceError("nullspace: matrix " + dims(a) + " has full column rank");
    return q.cols_range(rank, n - rank);
}

double fro_norm_sq(const ComplexMatrix& a) noexcept
{
    double s = 0.0;
    for (const cplx& z : a.entries())
        s += abs2(z);
    return s;
}

double fro_norm(const ComplexMatrix& a) noexcept
{
    return std::sqrt(fro_norm_sq(a));
}

double cond_estimate(const ComplexMatrix& a)
{
    require_square(a, "cond_estimate");
    const SingularValueDecomposition d = svd(a);
    const double smax = d.s.front();
    const double smin = d.s.back();
    if (smin == 0.0)
        return std::numeric_limits<double>::infinity();
    return smax / smin;
}

cplx trace(const ComplexMatrix& a)
{
    require_square(a, "trace");
    cplx s{};
    for (std::size_t i = 0; i < a.rows(); ++i)
        s += a(i, i);
    return s;
}

ComplexMatrix normalized(const ComplexMatrix& a)
{
    const double n = fro_norm(a);
    if (n == 0.0)
        throw ContractViolation("normalized: zero matrix");
    return cplx{1.0 / n} * a;
}

} // namespace iasim
