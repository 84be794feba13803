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

#include "quasifs/integral.hpp"

#include "quasifs/errors.hpp"

namespace quasifs {

Integral normalized_integral(const QuasiHopfAlgebra& h) {
    const std::size_t n = h.dim();
    Matrix system(h.field(), n * n, n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix block = h.left_regular(h.basis(i)) - Matrix::identity(h.field(), n).scaled(h.counit(h.basis(i)));
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) system(i * n + r, c) = block(r, c);
    }
    auto space = kernel(system);
    if (space.empty()) throw NoIntegral("no nonzero left integral");
    if (space.size() > 1)
        throw AmbiguousIntegral("space of left integrals has dimension " + std::to_string(space.size()));
    FieldElement eps = h.counit(space[0]);
    if (eps.is_zero()) throw NotNormalizable("counit vanishes on the left integrals; H is not semisimple");
    Vector lambda = space[0];
    FieldElement inv = eps.inverse();
    for (auto& x : lambda) x *= inv;
    return {std::move(lambda)};
}

Matrix antipode_inverse(const QuasiHopfAlgebra& h) {
    return h.antipode_inverse_matrix();
}

namespace {

// Accumulates c * (x (x) y) into t.
void add_simple(Tensor& t, const FieldElement& c, const Vector& x, const Vector& y) {
    const std::size_t n = x.size();
    for (std::size_t a = 0; a < n; ++a) {
        if (x[a].is_zero()) continue;
        FieldElement cx = c * x[a];
        for (std::size_t b = 0; b < n; ++b)
            if (!y[b].is_zero()) t[a * n + b].add_product(cx, y[b]);
    }
}

} // namespace

HausserNillElements hausser_nill(const QuasiHopfAlgebra& h) {
    const std::size_t n = h.dim();
    const FieldPtr& F = h.field();
    HausserNillElements hn{Tensor(F, {n, n}), Tensor(F, {n, n}), Tensor(F, {n, n}), Tensor(F, {n, n})};
    const Tensor& phi = h.phi();
    const Tensor& psi = h.phi_inv();

    for (std::size_t flat : phi.nonzeros()) {
        auto abc = phi.multi_index(flat);
        Vector e1 = h.basis(abc[0]), e2 = h.basis(abc[1]), e3 = h.basis(abc[2]);
        // q_R
        Vector right = h.multiply(h.antipode_inverse(h.multiply(h.alpha(), e3)), e2);
        add_simple(hn.q_r, phi[flat], e1, right);
        // p_L
        Vector left = h.multiply(e2, h.antipode_inverse(h.multiply(e1, h.beta())));
        add_simple(hn.p_l, phi[flat], left, e3);
    }
    for (std::size_t flat : psi.nonzeros()) {
        auto abc = psi.multi_index(flat);
        Vector e1 = h.basis(abc[0]), e2 = h.basis(abc[1]), e3 = h.basis(abc[2]);
        // p_R
        Vector right = h.multiply(h.multiply(e2, h.beta()), h.antipode(e3));
        add_simple(hn.p_r, psi[flat], e1, right);
        // q_L
        Vector left = h.multiply(h.multiply(h.antipode(e1), h.alpha()), e2);
        add_simple(hn.q_l, psi[flat], left, e3);
    }
    return hn;
}

const char* to_string(TChoice t) { return t == TChoice::pl ? "pl" : "pr"; }

const Tensor& select(const HausserNillElements& hn, TChoice t) {
    return t == TChoice::pl ? hn.p_l : hn.p_r;
}

Vector antipode_alpha_pairing(const QuasiHopfAlgebra& h, const Tensor& t) {
    Vector out = h.zero();
    for (std::size_t flat : t.nonzeros()) {
        auto ab = t.multi_index(flat);
        Vector v = h.multiply(h.multiply(h.antipode(h.basis(ab[0])), h.alpha()), h.basis(ab[1]));
        for (std::size_t q = 0; q < v.size(); ++q)
            if (!v[q].is_zero()) out[q].add_product(v[q], t[flat]);
    }
    return out;
}

Vector nu_element(const QuasiHopfAlgebra& h, const Integral& integral, const HausserNillElements& hn,
                  TChoice t) {
    Tensor product = h.multiply(h.multiply(hn.q_l, h.coproduct(integral.lambda)), select(hn, t));
    return h.collapse(product);
}

Vector nu_element(const QuasiHopfAlgebra& h, const Integral& integral, TChoice t) {
    return nu_element(h, integral, hausser_nill(h), t);
}

} // namespace quasifs
