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

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "quasifs/cyclotomic.hpp"

namespace quasifs {

using Vector = std::vector<FieldElement>;

Vector zero_vector(const FieldPtr& field, std::size_t n);
bool is_zero(const Vector& v);

/// Dense row-major matrix over a cyclotomic field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<FieldElement> entries);

    static Matrix identity(const FieldPtr& field, std::size_t n);
    /// Single-column matrix holding v.
    static Matrix column_vector(const FieldPtr& field, const Vector& v);
    /// Matrix whose columns are the given vectors, each of length rows.
    static Matrix from_columns(const FieldPtr& field, std::size_t rows, const std::vector<Vector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldPtr& field() const { return field_; }

    FieldElement& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const FieldElement& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    const std::vector<FieldElement>& entries() const { return entries_; }

    Vector column(std::size_t c) const;
    Vector row(std::size_t r) const;

    Matrix transpose() const;
    Matrix scaled(const FieldElement& s) const;
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& v);
    friend bool operator==(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    FieldPtr field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<FieldElement> entries_;
};

FieldElement trace(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);
/// Exact inverse; throws Singular.
Matrix invert(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Reduced row echelon form in place. Pivots are the first nonzero entry of
/// each row scanning columns left to right, normalized to 1. Returns the
/// pivot column of each nonzero row.
std::vector<std::size_t> rref_in_place(Matrix& m);

struct Solution {
    Vector particular;            // free variables set to zero
    std::vector<Vector> kernel;   // one vector per free column, in column order
};

/// All solutions of A x = b, or nullopt when the system is inconsistent.
std::optional<Solution> solve(const Matrix& a, const Vector& b);
std::vector<Vector> kernel(const Matrix& a);

/// Canonical basis of span(vectors): the nonzero rows of the reduced row
/// echelon form of the matrix with those rows. Equal subspaces give equal
/// bases.
std::vector<Vector> canonical_basis(const FieldPtr& field, std::size_t dim,
                                    const std::vector<Vector>& vectors);

/// Coordinates of v in the given (linearly independent) basis; nullopt when
/// v is outside the span.
std::optional<Vector> coordinates(const FieldPtr& field, std::size_t dim,
                                  const std::vector<Vector>& basis, const Vector& v);

} // namespace quasifs
