/*
   Copyright 2026 The quasifs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "quasifs/matrix.hpp"

#include <sstream>

#include "quasifs/errors.hpp"

namespace quasifs {

Vector zero_vector(const FieldPtr& field, std::size_t n) {
    return Vector(n, field->zero());
}

bool is_zero(const Vector& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_->zero()) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols)
        throw ShapeMismatch("matrix " + std::to_string(rows) + "x" + std::to_string(cols) + " given " +
                            std::to_string(entries_.size()) + " entries");
}

Matrix Matrix::identity(const FieldPtr& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field->one();
    return m;
}

Matrix Matrix::column_vector(const FieldPtr& field, const Vector& v) {
    return Matrix(field, v.size(), 1, v);
}

Matrix Matrix::from_columns(const FieldPtr& field, std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw ShapeMismatch("column length");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::scaled(const FieldElement& s) const {
    Matrix out = *this;
    for (auto& x : out.entries_)
        if (!x.is_zero()) x *= s;
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix sum");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeMismatch("matrix difference");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw ShapeMismatch("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const auto& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j).add_product(aik, bkj);
            }
        }
    return out;
}

Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.size()) throw ShapeMismatch("matrix-vector product");
    Vector out = zero_vector(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[i].add_product(a(i, k), v[k]);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
        os << "]";
    }
    os << "]";
    return os.str();
}

FieldElement trace(const Matrix& m) {
    if (!m.is_square()) throw ShapeMismatch("trace of a non-square matrix");
    FieldElement t = m.field()->zero();
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const auto& aij = a(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t prow = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t r = prow;
        while (r < rows && m(r, c).is_zero()) ++r;
        if (r == rows) continue;
        if (r != prow)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(prow, k));
        FieldElement inv = m(prow, c).inverse();
        support.clear();
        for (std::size_t k = c; k < cols; ++k) {
            if (m(prow, k).is_zero()) continue;
            m(prow, k) *= inv;
            support.push_back(k);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == prow || m(i, c).is_zero()) continue;
            FieldElement f = m(i, c);
            for (std::size_t k : support) m(i, k) -= f * m(prow, k);
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix copy = m;
    return rref_in_place(copy).size();
}

Matrix invert(const Matrix& m) {
    if (!m.is_square()) throw ShapeMismatch("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = m.field()->one();
    }
    auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw Singular("matrix has rank below " + std::to_string(n));
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
    return inv;
}

std::optional<Solution> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw ShapeMismatch("right-hand side length");
    const std::size_t n = a.cols();
    Matrix aug(a.field(), a.rows(), n + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;

    Solution sol;
    sol.particular = zero_vector(a.field(), n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        is_pivot[pivots[i]] = true;
        sol.particular[pivots[i]] = aug(i, n);
    }
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v = zero_vector(a.field(), n);
        v[f] = a.field()->one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -aug(i, f);
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

std::vector<Vector> kernel(const Matrix& a) {
    return solve(a, zero_vector(a.field(), a.rows()))->kernel;
}

std::vector<Vector> canonical_basis(const FieldPtr& field, std::size_t dim,
                                    const std::vector<Vector>& vectors) {
    Matrix m(field, vectors.size(), dim);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
        if (vectors[r].size() != dim) throw ShapeMismatch("vector length");
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
    }
    auto pivots = rref_in_place(m);
    std::vector<Vector> out;
    for (std::size_t r = 0; r < pivots.size(); ++r) out.push_back(m.row(r));
    return out;
}

std::optional<Vector> coordinates(const FieldPtr& field, std::size_t dim,
                                  const std::vector<Vector>& basis, const Vector& v) {
    auto sol = solve(Matrix::from_columns(field, dim, basis), v);
    if (!sol) return std::nullopt;
    return sol->particular;
}

} // namespace quasifs
