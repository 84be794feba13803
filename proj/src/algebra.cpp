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

#include "quasifs/algebra.hpp"

#include "quasifs/errors.hpp"

namespace quasifs {

namespace {

std::vector<std::size_t> cube(std::size_t n) { return {n, n, n}; }

} // namespace

QuasiHopfData::QuasiHopfData(FieldPtr f, std::size_t n)
    : field(std::move(f)),
      dim(n),
      unit(zero_vector(field, n)),
      mult(field, cube(n)),
      comult(field, cube(n)),
      counit(zero_vector(field, n)),
      phi(field, cube(n)),
      antipode(field, n, n),
      alpha(zero_vector(field, n)),
      beta(zero_vector(field, n)) {
    for (std::size_t i = 0; i < n; ++i) basis_names.push_back("e" + std::to_string(i));
}

QuasiHopfAlgebra::QuasiHopfAlgebra(QuasiHopfData data) : data_(std::move(data)) {
    const std::size_t n = data_.dim;
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw DimensionError(what);
    };
    require(n > 0, "algebra dimension must be positive");
    require(data_.basis_names.size() == n, "basis names");
    require(data_.unit.size() == n, "unit length");
    require(data_.counit.size() == n, "counit length");
    require(data_.alpha.size() == n, "alpha length");
    require(data_.beta.size() == n, "beta length");
    require(data_.mult.legs() == cube(n), "mult shape");
    require(data_.comult.legs() == cube(n), "comult shape");
    require(data_.phi.legs() == cube(n), "phi shape");
    require(!data_.phi_inv || data_.phi_inv->legs() == cube(n), "phi_inv shape");
    require(data_.antipode.rows() == n && data_.antipode.cols() == n, "antipode shape");

    mult_terms_.resize(n * n);
    for (std::size_t flat : data_.mult.nonzeros()) {
        auto idx = data_.mult.multi_index(flat);
        mult_terms_[idx[0] * n + idx[1]].push_back({idx[2], data_.mult[flat]});
    }
    comult_terms_.resize(n);
    for (std::size_t flat : data_.comult.nonzeros()) {
        auto idx = data_.comult.multi_index(flat);
        comult_terms_[idx[0]].push_back({idx[1], idx[2], data_.comult[flat]});
    }
    try {
        antipode_inv_ = invert(data_.antipode);
    } catch (const Singular&) {
        antipode_inv_.reset();
    }

    if (!data_.phi_inv) {
        phi_inv_supplied_ = false;
        // Solve phi * x = 1 (x) 1 (x) 1 column by column of left multiplication.
        const std::size_t m = n * n * n;
        Matrix left(field(), m, m);
        for (std::size_t col = 0; col < m; ++col) {
            Tensor e(field(), cube(n));
            e[col] = field()->one();
            Tensor img = multiply(data_.phi, e);
            for (std::size_t r : img.nonzeros()) left(r, col) = img[r];
        }
        auto sol = solve(left, one(3).entries());
        if (!sol || !sol->kernel.empty()) throw Singular("phi is not invertible in H(x)H(x)H");
        data_.phi_inv = Tensor(field(), cube(n), sol->particular);
    }
}

Vector QuasiHopfAlgebra::basis(std::size_t i) const {
    Vector v = zero();
    v.at(i) = field()->one();
    return v;
}

Vector QuasiHopfAlgebra::multiply(const Vector& a, const Vector& b) const {
    const std::size_t n = dim();
    Vector out = zero();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero()) continue;
            FieldElement ab = a[i] * b[j];
            for (const auto& t : mult_terms_[i * n + j]) out[t.k].add_product(ab, t.c);
        }
    }
    return out;
}

Tensor QuasiHopfAlgebra::multiply(const Tensor& a, const Tensor& b) const {
    if (a.legs() != b.legs()) throw LegMismatch("product in a tensor power");
    const std::size_t n = dim();
    const std::size_t k = a.order();
    Tensor out(field(), a.legs());
    auto nza = a.nonzeros();
    auto nzb = b.nonzeros();
    std::vector<std::vector<std::size_t>> ib;
    ib.reserve(nzb.size());
    for (std::size_t fb : nzb) ib.push_back(b.multi_index(fb));

    std::vector<const std::vector<Term>*> lists(k);
    std::vector<std::size_t> pos(k), idx(k);
    for (std::size_t fa : nza) {
        auto ia = a.multi_index(fa);
        for (std::size_t q = 0; q < nzb.size(); ++q) {
            bool empty = false;
            for (std::size_t l = 0; l < k; ++l) {
                lists[l] = &mult_terms_[ia[l] * n + ib[q][l]];
                if (lists[l]->empty()) { empty = true; break; }
            }
            if (empty) continue;
            FieldElement base = a[fa] * b[nzb[q]];
            // Odometer over the cartesian product of the per-leg term lists.
            std::fill(pos.begin(), pos.end(), 0);
            while (true) {
                FieldElement c = base;
                for (std::size_t l = 0; l < k; ++l) {
                    const Term& t = (*lists[l])[pos[l]];
                    idx[l] = t.k;
                    if (!t.c.is_one()) c *= t.c;
                }
                out.at(idx) += c;
                bool done = true;
                for (std::size_t l = k; l-- > 0;) {
                    if (++pos[l] < lists[l]->size()) {
                        done = false;
                        break;
                    }
                    pos[l] = 0;
                }
                if (done) break;
            }
        }
    }
    return out;
}

Matrix QuasiHopfAlgebra::left_regular(const Vector& a) const {
    const std::size_t n = dim();
    Matrix m(field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& t : mult_terms_[i * n + j]) m(t.k, j).add_product(a[i], t.c);
    }
    return m;
}

Matrix QuasiHopfAlgebra::right_regular(const Vector& a) const {
    const std::size_t n = dim();
    Matrix m(field(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        if (a[j].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& t : mult_terms_[i * n + j]) m(t.k, i).add_product(a[j], t.c);
    }
    return m;
}

std::optional<Vector> QuasiHopfAlgebra::inverse(const Vector& a) const {
    auto sol = solve(left_regular(a), unit());
    if (!sol || !sol->kernel.empty()) return std::nullopt;
    if (!(multiply(sol->particular, a) == unit())) return std::nullopt;
    return sol->particular;
}

Tensor QuasiHopfAlgebra::one(std::size_t order) const {
    std::vector<Vector> f(order, unit());
    return tensor_product(f);
}

Tensor QuasiHopfAlgebra::place(const Vector& x, std::size_t leg, std::size_t order) const {
    std::vector<Vector> f(order, unit());
    f.at(leg) = x;
    return tensor_product(f);
}

Tensor QuasiHopfAlgebra::tensor_product(const std::vector<Vector>& factors) const {
    Tensor out(field(), {}, {field()->one()});
    for (const auto& v : factors) out = outer(out, Tensor::from_vector(field(), v));
    return out;
}

Vector QuasiHopfAlgebra::collapse(const Tensor& t) const {
    if (t.order() == 0) {
        Vector v = zero();
        for (std::size_t i = 0; i < dim(); ++i) v[i] = unit()[i] * t[0];
        return v;
    }
    Vector out = zero();
    for (std::size_t flat : t.nonzeros()) {
        auto idx = t.multi_index(flat);
        Vector acc = basis(idx[0]);
        for (std::size_t l = 1; l < idx.size(); ++l) acc = multiply(acc, basis(idx[l]));
        for (std::size_t i = 0; i < dim(); ++i)
            if (!acc[i].is_zero()) out[i].add_product(acc[i], t[flat]);
    }
    return out;
}

Tensor QuasiHopfAlgebra::coproduct(const Vector& a) const {
    return coproduct_leg(Tensor::from_vector(field(), a), 0);
}

Tensor QuasiHopfAlgebra::coproduct_leg(const Tensor& t, std::size_t leg) const {
    if (leg >= t.order()) throw LegMismatch("coproduct leg out of range");
    std::vector<std::size_t> legs(t.order() + 1, dim());
    Tensor out(field(), legs);
    std::vector<std::size_t> oi(legs.size());
    for (std::size_t flat : t.nonzeros()) {
        auto idx = t.multi_index(flat);
        for (std::size_t l = 0; l < leg; ++l) oi[l] = idx[l];
        for (std::size_t l = leg + 1; l < idx.size(); ++l) oi[l + 1] = idx[l];
        for (const auto& ct : comult_terms_[idx[leg]]) {
            oi[leg] = ct.j;
            oi[leg + 1] = ct.k;
            out.at(oi).add_product(t[flat], ct.c);
        }
    }
    return out;
}

FieldElement QuasiHopfAlgebra::counit(const Vector& a) const {
    FieldElement s = field()->zero();
    for (std::size_t i = 0; i < dim(); ++i)
        if (!a[i].is_zero() && !data_.counit[i].is_zero()) s.add_product(a[i], data_.counit[i]);
    return s;
}

Tensor QuasiHopfAlgebra::counit_leg(const Tensor& t, std::size_t leg) const {
    if (leg >= t.order()) throw LegMismatch("counit leg out of range");
    std::vector<std::size_t> legs(t.order() - 1, dim());
    Tensor out(field(), legs);
    std::vector<std::size_t> oi(legs.size());
    for (std::size_t flat : t.nonzeros()) {
        auto idx = t.multi_index(flat);
        const auto& e = data_.counit[idx[leg]];
        if (e.is_zero()) continue;
        for (std::size_t l = 0, o = 0; l < idx.size(); ++l)
            if (l != leg) oi[o++] = idx[l];
        out.at(oi).add_product(t[flat], e);
    }
    return out;
}

Vector QuasiHopfAlgebra::antipode(const Vector& a) const {
    return data_.antipode * a;
}

const Matrix& QuasiHopfAlgebra::antipode_inverse_matrix() const {
    if (!antipode_inv_) throw Singular("antipode is not bijective");
    return *antipode_inv_;
}

Vector QuasiHopfAlgebra::antipode_inverse(const Vector& a) const {
    return antipode_inverse_matrix() * a;
}

} // namespace quasifs
