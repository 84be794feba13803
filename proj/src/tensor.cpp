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

#include "quasifs/tensor.hpp"

#include <map>
#include <numeric>
#include <string>

#include "quasifs/errors.hpp"

namespace quasifs {

namespace {

std::size_t product(const std::vector<std::size_t>& legs) {
    return std::accumulate(legs.begin(), legs.end(), std::size_t{1}, std::multiplies<>());
}

} // namespace

Tensor::Tensor(FieldPtr field, std::vector<std::size_t> legs)
    : Tensor(field, legs, std::vector<FieldElement>(product(legs), field->zero())) {}

Tensor::Tensor(FieldPtr field, std::vector<std::size_t> legs, std::vector<FieldElement> entries)
    : field_(std::move(field)), legs_(std::move(legs)), entries_(std::move(entries)) {
    if (entries_.size() != product(legs_)) throw ShapeMismatch("tensor entry count");
    strides_.assign(legs_.size(), 1);
    for (std::size_t k = legs_.size(); k-- > 1;) strides_[k - 1] = strides_[k] * legs_[k];
}

Tensor Tensor::from_matrix(const Matrix& m) {
    return Tensor(m.field(), {m.rows(), m.cols()}, m.entries());
}

Tensor Tensor::from_vector(const FieldPtr& field, const Vector& v) {
    return Tensor(field, {v.size()}, v);
}

std::size_t Tensor::flat_index(std::span<const std::size_t> index) const {
    if (index.size() != legs_.size()) throw ShapeMismatch("tensor index arity");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < index.size(); ++k) {
        if (index[k] >= legs_[k]) throw ShapeMismatch("tensor index out of range");
        flat += index[k] * strides_[k];
    }
    return flat;
}

std::vector<std::size_t> Tensor::multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(legs_.size());
    for (std::size_t k = 0; k < legs_.size(); ++k) {
        idx[k] = flat / strides_[k];
        flat %= strides_[k];
    }
    return idx;
}

std::vector<std::size_t> Tensor::nonzeros() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (!entries_[i].is_zero()) out.push_back(i);
    return out;
}

Matrix Tensor::to_matrix() const {
    if (legs_.size() != 2) throw ShapeMismatch("to_matrix needs a 2-leg tensor");
    return Matrix(field_, legs_[0], legs_[1], entries_);
}

Vector Tensor::to_vector() const {
    if (legs_.size() != 1) throw ShapeMismatch("to_vector needs a 1-leg tensor");
    return entries_;
}

bool Tensor::is_zero() const {
    for (const auto& x : entries_)
        if (!x.is_zero()) return false;
    return true;
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
    if (legs_ != rhs.legs_) throw LegMismatch("tensor sum");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& rhs) {
    if (legs_ != rhs.legs_) throw LegMismatch("tensor difference");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
    return *this;
}

Tensor Tensor::scaled(const FieldElement& s) const {
    Tensor out = *this;
    for (auto& x : out.entries_)
        if (!x.is_zero()) x *= s;
    return out;
}

bool operator==(const Tensor& a, const Tensor& b) {
    return a.legs_ == b.legs_ && a.entries_ == b.entries_;
}

Tensor contract(const Tensor& a, const Tensor& b, std::span<const LegPair> pairs) {
    std::vector<bool> a_paired(a.order(), false), b_paired(b.order(), false);
    for (auto [la, lb] : pairs) {
        if (la >= a.order() || lb >= b.order()) throw LegMismatch("leg index out of range");
        if (a_paired[la] || b_paired[lb]) throw LegMismatch("leg paired twice");
        if (a.legs()[la] != b.legs()[lb])
            throw LegMismatch("leg " + std::to_string(la) + " (dim " + std::to_string(a.legs()[la]) +
                              ") vs leg " + std::to_string(lb) + " (dim " + std::to_string(b.legs()[lb]) + ")");
        a_paired[la] = b_paired[lb] = true;
    }
    std::vector<std::size_t> out_legs, a_free, b_free;
    for (std::size_t k = 0; k < a.order(); ++k)
        if (!a_paired[k]) { a_free.push_back(k); out_legs.push_back(a.legs()[k]); }
    for (std::size_t k = 0; k < b.order(); ++k)
        if (!b_paired[k]) { b_free.push_back(k); out_legs.push_back(b.legs()[k]); }
    Tensor out(a.field(), out_legs);

    // Group b's nonzeros by their paired-leg key.
    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::vector<std::size_t>>>> by_key;
    for (std::size_t flat : b.nonzeros()) {
        auto idx = b.multi_index(flat);
        std::vector<std::size_t> key;
        for (auto [la, lb] : pairs) key.push_back(idx[lb]);
        by_key[key].emplace_back(flat, std::move(idx));
    }
    std::vector<std::size_t> out_idx(out_legs.size());
    for (std::size_t fa : a.nonzeros()) {
        auto ia = a.multi_index(fa);
        std::vector<std::size_t> key;
        for (auto [la, lb] : pairs) key.push_back(ia[la]);
        auto it = by_key.find(key);
        if (it == by_key.end()) continue;
        for (std::size_t k = 0; k < a_free.size(); ++k) out_idx[k] = ia[a_free[k]];
        for (const auto& [fb, ib] : it->second) {
            for (std::size_t k = 0; k < b_free.size(); ++k) out_idx[a_free.size() + k] = ib[b_free[k]];
            out.at(out_idx).add_product(a[fa], b[fb]);
        }
    }
    return out;
}

Tensor outer(const Tensor& a, const Tensor& b) {
    return contract(a, b, {});
}

Tensor permute(const Tensor& t, std::span<const std::size_t> perm) {
    if (perm.size() != t.order()) throw LegMismatch("permutation arity");
    std::vector<bool> seen(perm.size(), false);
    std::vector<std::size_t> legs(perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) {
        if (perm[k] >= perm.size() || seen[perm[k]]) throw LegMismatch("not a permutation");
        seen[perm[k]] = true;
        legs[k] = t.legs()[perm[k]];
    }
    Tensor out(t.field(), legs);
    std::vector<std::size_t> oi(perm.size());
    for (std::size_t flat : t.nonzeros()) {
        auto ii = t.multi_index(flat);
        for (std::size_t k = 0; k < perm.size(); ++k) oi[k] = ii[perm[k]];
        out.at(oi) = t[flat];
    }
    return out;
}

} // namespace quasifs
