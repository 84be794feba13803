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

#include "quasifs/builders.hpp"

#include "quasifs/errors.hpp"
#include "quasifs/validate.hpp"

namespace quasifs {

namespace {

std::size_t idx3(std::size_t n, std::size_t a, std::size_t b, std::size_t c) { return (a * n + b) * n + c; }

Matrix stack(const FieldPtr& field, std::size_t cols, const std::vector<Matrix>& blocks) {
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows();
    Matrix out(field, rows, cols);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
        r0 += b.rows();
    }
    return out;
}

// Solution space of the invariance condition on alpha (left = true) or beta.
std::vector<Vector> invariance_space(const QuasiHopfAlgebra& h, bool alpha_side) {
    const std::size_t n = h.dim();
    const auto& field = h.field();
    std::vector<Matrix> blocks;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = Matrix::identity(field, n).scaled(-h.counit(h.basis(i)));
        Tensor d = h.coproduct(h.basis(i));
        for (std::size_t flat : d.nonzeros()) {
            Vector ej = h.basis(flat / n), ek = h.basis(flat % n);
            if (alpha_side)
                m += (h.left_regular(h.antipode(ej)) * h.right_regular(ek)).scaled(d[flat]);
            else
                m += (h.left_regular(ej) * h.right_regular(h.antipode(ek))).scaled(d[flat]);
        }
        blocks.push_back(std::move(m));
    }
    return kernel(stack(field, n, blocks));
}

// The two phi-normalizations as linear maps in the free unknown, the other
// element held fixed.
std::pair<Matrix, Matrix> normalization_maps(const QuasiHopfAlgebra& h, const Vector& fixed, bool solve_beta) {
    const std::size_t n = h.dim();
    const auto& field = h.field();
    Matrix m1(field, n, n), m2(field, n, n);
    auto e = [&](std::size_t i) { return h.basis(i); };
    const Tensor& phi = h.phi();
    for (std::size_t flat : phi.nonzeros()) {
        auto abc = phi.multi_index(flat);
        // phi1 beta S(phi2) alpha phi3
        if (solve_beta)
            m1 += (h.left_regular(e(abc[0])) *
                   h.right_regular(h.multiply(h.multiply(h.antipode(e(abc[1])), fixed), e(abc[2]))))
                      .scaled(phi[flat]);
        else
            m1 += (h.left_regular(h.multiply(h.multiply(e(abc[0]), fixed), h.antipode(e(abc[1])))) *
                   h.right_regular(e(abc[2])))
                      .scaled(phi[flat]);
    }
    const Tensor& psi = h.phi_inv();
    for (std::size_t flat : psi.nonzeros()) {
        auto abc = psi.multi_index(flat);
        // S(psi1) alpha psi2 beta S(psi3)
        if (solve_beta)
            m2 += (h.left_regular(h.multiply(h.multiply(h.antipode(e(abc[0])), fixed), e(abc[1]))) *
                   h.right_regular(h.antipode(e(abc[2]))))
                      .scaled(psi[flat]);
        else
            m2 += (h.left_regular(h.antipode(e(abc[0]))) *
                   h.right_regular(h.multiply(h.multiply(e(abc[1]), fixed), h.antipode(e(abc[2])))))
                      .scaled(psi[flat]);
    }
    return {std::move(m1), std::move(m2)};
}

std::vector<Vector> candidates(const QuasiHopfAlgebra& h, const std::vector<Vector>& space) {
    std::vector<Vector> out;
    if (coordinates(h.field(), h.dim(), space, h.unit())) out.push_back(h.unit());
    for (const auto& v : space) out.push_back(v);
    if (space.size() > 1) {
        Vector sum = h.zero();
        for (const auto& v : space)
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += v[i];
        out.push_back(std::move(sum));
    }
    return out;
}

std::optional<Vector> solve_other(const QuasiHopfAlgebra& h, const Vector& fixed, const std::vector<Vector>& space,
                                  bool solve_beta) {
    const std::size_t n = h.dim();
    const auto& field = h.field();
    auto [m1, m2] = normalization_maps(h, fixed, solve_beta);
    Matrix basis = Matrix::from_columns(field, n, space);
    Matrix system = stack(field, space.size(), {m1 * basis, m2 * basis});
    Vector rhs = h.unit();
    rhs.insert(rhs.end(), h.unit().begin(), h.unit().end());
    auto sol = solve(system, rhs);
    if (!sol) return std::nullopt;
    return basis * sol->particular;
}

bool normalizations_hold(QuasiHopfData data, const QuasiAntipode& qa) {
    data.alpha = qa.alpha;
    data.beta = qa.beta;
    QuasiHopfAlgebra h(std::move(data));
    ValidationReport r = validate(h, ValidationLevel::core);
    for (const char* name : {"quasi_antipode_alpha", "quasi_antipode_beta", "quasi_antipode_phi",
                             "quasi_antipode_phi_inv"}) {
        const AxiomResult* a = r.find(name);
        if (!a || !a->passed) return false;
    }
    return true;
}

} // namespace

QuasiAntipode quasi_antipode_complete(const QuasiHopfData& data) {
    QuasiHopfData base = data;
    base.alpha = base.unit;
    base.beta = base.unit;
    QuasiHopfAlgebra h(base);
    base.phi_inv = h.phi_inv();
    auto alphas = invariance_space(h, true);
    auto betas = invariance_space(h, false);
    if (alphas.empty() || betas.empty())
        throw CompletionFailed(alphas.empty() ? "no nonzero alpha satisfies S(h1) alpha h2 = eps(h) alpha"
                                              : "no nonzero beta satisfies h1 beta S(h2) = eps(h) beta");
    for (const auto& a : candidates(h, alphas))
        if (auto b = solve_other(h, a, betas, true)) {
            QuasiAntipode qa{a, *b};
            if (normalizations_hold(base, qa)) return qa;
        }
    for (const auto& b : candidates(h, betas))
        if (auto a = solve_other(h, b, alphas, false)) {
            QuasiAntipode qa{*a, b};
            if (normalizations_hold(base, qa)) return qa;
        }
    throw CompletionFailed("no (alpha, beta) in the solution spaces meets both phi-normalizations");
}

AlgebraPtr build_group_algebra(const GroupTable& g, unsigned conductor) {
    const std::size_t n = g.order();
    FieldPtr field = CycloField::get(conductor);
    QuasiHopfData d(field, n);
    const FieldElement one = field->one();
    const std::size_t e = g.identity();
    d.basis_names = g.names();
    d.unit[e] = one;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) d.mult[idx3(n, a, b, g.mul(a, b))] = one;
        d.comult[idx3(n, a, a, a)] = one;
        d.counit[a] = one;
        d.antipode(g.inverse(a), a) = one;
    }
    d.phi[idx3(n, e, e, e)] = one;
    d.phi_inv = d.phi;
    d.alpha = d.unit;
    d.beta = d.unit;
    return std::make_shared<const QuasiHopfAlgebra>(std::move(d));
}

AlgebraPtr build_twisted_dual(const CocycleTable& omega) {
    CocycleReport rep = validate_cocycle(omega);
    if (!rep.ok()) {
        std::string w;
        for (auto i : rep.witness) w += (w.empty() ? "" : ", ") + std::to_string(i);
        throw InvalidCocycle(std::string(rep.normalized ? "cocycle identity" : "normalization") + " fails at (" + w +
                             ")");
    }
    const GroupTable& g = omega.group();
    const std::size_t n = g.order();
    FieldPtr field = CycloField::get(omega.conductor());
    QuasiHopfData d(field, n);
    const FieldElement one = field->one();
    Tensor phi_inv(field, {n, n, n});
    for (std::size_t a = 0; a < n; ++a) {
        d.basis_names[a] = "delta_" + g.names()[a];
        d.unit[a] = one;
        d.mult[idx3(n, a, a, a)] = one;
        for (std::size_t b = 0; b < n; ++b) {
            d.comult[idx3(n, g.mul(a, b), a, b)] = one;
            for (std::size_t c = 0; c < n; ++c) {
                d.phi[idx3(n, a, b, c)] = field->zeta_power(omega.exponent(a, b, c));
                phi_inv[idx3(n, a, b, c)] = field->zeta_power(-omega.exponent(a, b, c));
            }
        }
        d.antipode(g.inverse(a), a) = one;
    }
    d.counit[g.identity()] = one;
    d.phi_inv = std::move(phi_inv);
    QuasiAntipode qa = quasi_antipode_complete(d);
    d.alpha = std::move(qa.alpha);
    d.beta = std::move(qa.beta);
    return std::make_shared<const QuasiHopfAlgebra>(std::move(d));
}

std::vector<HModule> dual_group_simples(const AlgebraPtr& algebra, const GroupTable& g) {
    const auto& field = algebra->field();
    std::vector<HModule> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
        std::vector<Matrix> action;
        for (std::size_t h = 0; h < g.order(); ++h)
            action.emplace_back(field, 1, 1, Vector{h == x ? field->one() : field->zero()});
        out.emplace_back("k_" + g.names()[x], algebra, std::move(action));
    }
    return out;
}

} // namespace quasifs
