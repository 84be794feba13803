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
#include <span>
#include <utility>
#include <vector>

#include "quasifs/matrix.hpp"

namespace quasifs {

/// Dense multi-leg array over a cyclotomic field; entries are stored in
/// lexicographic (row-major) index order.
class Tensor {
public:
    Tensor(FieldPtr field, std::vector<std::size_t> legs);
    Tensor(FieldPtr field, std::vector<std::size_t> legs, std::vector<FieldElement> entries);

    static Tensor from_matrix(const Matrix& m);
    static Tensor from_vector(const FieldPtr& field, const Vector& v);

    const FieldPtr& field() const { return field_; }
    const std::vector<std::size_t>& legs() const { return legs_; }
    std::size_t order() const { return legs_.size(); }
    std::size_t size() const { return entries_.size(); }

    FieldElement& operator[](std::size_t flat) { return entries_[flat]; }
    const FieldElement& operator[](std::size_t flat) const { return entries_[flat]; }
    FieldElement& at(std::span<const std::size_t> index) { return entries_[flat_index(index)]; }
    const FieldElement& at(std::span<const std::size_t> index) const { return entries_[flat_index(index)]; }
    const std::vector<FieldElement>& entries() const { return entries_; }

    std::size_t flat_index(std::span<const std::size_t> index) const;
    std::vector<std::size_t> multi_index(std::size_t flat) const;
    /// Flat indices of the nonzero entries, ascending.
    std::vector<std::size_t> nonzeros() const;

    Matrix to_matrix() const;   // order 2 only
    Vector to_vector() const;   // order 1 only

    bool is_zero() const;
    Tensor& operator+=(const Tensor& rhs);
    Tensor& operator-=(const Tensor& rhs);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    Tensor scaled(const FieldElement& s) const;
    friend bool operator==(const Tensor& a, const Tensor& b);

private:
    FieldPtr field_;
    std::vector<std::size_t> legs_;
    std::vector<std::size_t> strides_;
    std::vector<FieldElement> entries_;
};

using LegPair = std::pair<std::size_t, std::size_t>;

/// Sums products over the paired legs (leg of a, leg of b). Output legs are
/// the unpaired legs of a followed by the unpaired legs of b. Throws
/// LegMismatch when paired legs differ in dimension.
Tensor contract(const Tensor& a, const Tensor& b, std::span<const LegPair> pairs);

/// Outer product: contract with no pairs.
Tensor outer(const Tensor& a, const Tensor& b);

/// Leg k of the result is leg perm[k] of t.
Tensor permute(const Tensor& t, std::span<const std::size_t> perm);

} // namespace quasifs
