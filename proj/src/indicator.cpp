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

#include "quasifs/indicator.hpp"

#include "quasifs/errors.hpp"

namespace quasifs {

namespace {

Vector flatten(const Matrix& m) { return m.entries(); }

Vector identity_vec(const FieldPtr& field, std::size_t d) { return flatten(Matrix::identity(field, d)); }

std::optional<Vector> coordinates_or_throw(const FieldPtr& field, std::size_t dim, const std::vector<Vector>& basis,
                                           const Vector& v, const char* what) {
    auto c = coordinates(field, dim, basis, v);
    if (!c) throw OracleInconsistent(std::string(what) + " left the invariant subspace");
    return c;
}

} // namespace

const char* to_string(PivotalMethod m) {
    return m == PivotalMethod::beta_invertible ? "beta_invertible" : "linear_system";
}

Vector pivotal_rhs(const QuasiHopfAlgebra& h, const Integral& integral, const Tensor& t) {
    Tensor x = h.multiply(h.coproduct(integral.lambda), t);
    const std::size_t n = h.dim();
    Vector out = h.zero();
    for (std::size_t flat : x.nonzeros()) {
        std::size_t a = flat / n, b = flat % n;
        Vector term = h.multiply(h.antipode(h.basis(a)), h.basis(b));
        for (std::size_t k = 0; k < n; ++k) out[k].add_product(x[flat], term[k]);
    }
    return out;
}

PivotalData pivotal_g(const QuasiHopfAlgebra& h, const Integral& integral, const HausserNillElements& hn,
                      TChoice t, PivotalMethod method) {
    const auto& field = h.field();
    const std::size_t n = h.dim();
    const Tensor& tt = select(hn, t);
    Vector g_inv;
    if (method == PivotalMethod::beta_invertible) {
        auto sb_inv = h.inverse(h.antipode(h.beta()));
        if (!sb_inv) throw NoUniqueSolution("S(beta) is not invertible");
        g_inv = h.multiply(pivotal_rhs(h, integral, tt), *sb_inv);
    } else {
        // Regular module: *H acts by rho(h) = L(S h)^T. Unknown x enters as
        // (rho_*(beta) (x) L(x)) vec(I), linear in x.
        Matrix dual_beta = h.left_regular(h.antipode(h.beta())).transpose();
        Vector id = identity_vec(field, n);
        Matrix system(field, n * n, n);
        for (std::size_t k = 0; k < n; ++k) {
            Vector col = kron(dual_beta, h.left_regular(h.basis(k))) * id;
            for (std::size_t r = 0; r < n * n; ++r) system(r, k) = col[r];
        }
        Tensor x = h.multiply(h.coproduct(integral.lambda), tt);
        Matrix rhs_op(field, n * n, n * n);
        for (std::size_t flat : x.nonzeros()) {
            std::size_t a = flat / n, b = flat % n;
            Matrix left = h.left_regular(h.antipode(h.basis(a))).transpose();
            rhs_op += kron(left, h.left_regular(h.basis(b))).scaled(x[flat]);
        }
        auto sol = solve(system, rhs_op * id);
        if (!sol) throw NoUniqueSolution("pivotal system has no solution");
        if (!sol->kernel.empty())
            throw NoUniqueSolution("pivotal system has a " + std::to_string(sol->kernel.size()) +
                                   "-dimensional solution space");
        g_inv = sol->particular;
    }
    auto g = h.inverse(g_inv);
    if (!g) throw Singular("pivotal element is not invertible");
    return {*g, g_inv, method};
}

PivotalData pivotal_g(const QuasiHopfAlgebra& h, const Integral& integral, const HausserNillElements& hn,
                      TChoice t) {
    PivotalData general = pivotal_g(h, integral, hn, t, PivotalMethod::linear_system);
    if (!h.inverse(h.antipode(h.beta()))) return general;
    PivotalData direct = pivotal_g(h, integral, hn, t, PivotalMethod::beta_invertible);
    if (direct.g != general.g)
        throw OracleInconsistent(std::string("pivotal methods disagree for t = ") + to_string(t));
    return direct;
}

PivotalSides pivotal_tensor_sides(const HModule& v, const PivotalData& pivotal, const Integral& integral,
                                const Tensor& t) {
    const auto& h = v.algebra();
    HModule dv = dual_module(v);
    Vector id = identity_vec(h.field(), v.dim());
    Vector lhs = kron(dv.act(h.beta()), v.act(pivotal.g_inv)) * id;
    Vector rhs = act_tensor(dv, v, h.multiply(h.coproduct(integral.lambda), t)) * id;
    return {std::move(lhs), std::move(rhs)};
}

Matrix pivotal_map(const HModule& v, const PivotalData& pivotal) { return v.act(pivotal.g); }

FieldElement categorical_trace(const HModule& v, const Matrix& f) {
    const auto& field = v.algebra().field();
    const std::size_t d = v.dim();
    if (f.rows() != d || f.cols() != d) throw ShapeMismatch("categorical trace needs a d x d map");
    EvCoev own = ev_coev(v);
    EvCoev dual = ev_coev(dual_module(v));
    // db_V lands in V (x) *V; f (x) id maps it to **V (x) *V, where ev_{*V} applies.
    Vector mid = kron(f, Matrix::identity(field, d)) * own.db;
    return (dual.ev * mid)[0];
}

FieldElement fs_indicator(const HModule& v, const Vector& nu_h) { return character(v)(nu_h); }

Matrix t_map(const HModule& v, const HModule& w, const Matrix& f, const PivotalData& pivotal) {
    if (f.rows() != w.dim() || f.cols() != v.dim()) throw ShapeMismatch("T expects a map *V -> W");
    Matrix out = v.act(pivotal.g_inv) * f.transpose();
    if (!is_intertwiner(dual_module(w), v, out))
        throw NotIntertwiner("T(f) fails to be H-linear from *" + w.name() + " to " + v.name());
    return out;
}

EMapResult e_map(const HModule& v, const HModule& w, const Integral& integral, const HausserNillElements& hn,
                 const PivotalData& pivotal, TChoice t) {
    const auto& h = v.algebra();
    const auto& field = h.field();
    HModule vw = tensor_module(v, w);
    HModule wv = tensor_module(w, v);
    EMapResult r{invariant_subspace(vw, InvariantMethod::kernel), invariant_subspace(wv, InvariantMethod::kernel),
                 Matrix(field, 0, 0), std::nullopt, std::nullopt, std::nullopt};
    const std::size_t ns = r.source_basis.size(), nt = r.target_basis.size();
    const std::size_t dim = vw.dim();
    const Tensor& tt = select(hn, t);

    Matrix via_adjunction(field, nt, ns);
    for (std::size_t j = 0; j < ns; ++j) {
        Matrix f = adjunction_a(v, w, hn, r.source_basis[j]);
        Vector image = adjunction_a_inv(w, v, t_map(v, w, f, pivotal));
        Vector c = *coordinates_or_throw(field, dim, r.target_basis, image, "A^-1 T A");
        for (std::size_t i = 0; i < nt; ++i) via_adjunction(i, j) = c[i];
    }

    Matrix composite = act_tensor(w, v, h.coproduct(integral.lambda)) * act_tensor(w, v, tt) *
                       flip_matrix(field, v.dim(), w.dim()) * act_tensor(v, w, hn.q_l);
    Matrix explicit_e(field, nt, ns);
    for (std::size_t j = 0; j < ns; ++j) {
        Vector c = *coordinates_or_throw(field, dim, r.target_basis, composite * r.source_basis[j], "explicit E");
        for (std::size_t i = 0; i < nt; ++i) explicit_e(i, j) = c[i];
    }
    if (!(via_adjunction == explicit_e))
        throw OracleInconsistent("E_" + v.name() + "," + w.name() + ": A^-1 T A differs from the explicit composite");
    r.matrix = std::move(via_adjunction);

    if (&v == &w || (v.name() == w.name() && v.action() == w.action())) {
        r.trace = trace(r.matrix);
        Tensor q_delta = h.multiply(hn.q_l, h.coproduct(integral.lambda));
        Matrix e_prime = act_tensor(v, v, tt) * flip_matrix(field, v.dim(), v.dim()) * act_tensor(v, v, q_delta);
        r.trace_full = trace(e_prime);
        r.chi_nu = fs_indicator(v, nu_element(h, integral, hn, t));
        if (!(*r.trace == *r.trace_full) || !(*r.trace == *r.chi_nu))
            throw OracleInconsistent("traces of E, E' and chi(nu_H) differ on " + v.name());
    }
    return r;
}

OracleResult oracle_classify(const HModule& v, const PivotalData& pivotal) {
    auto homs = hom_space(v, dual_module(v));
    if (homs.empty()) return {0, std::nullopt};
    if (homs.size() > 1)
        throw OracleInconsistent("Hom(" + v.name() + ", *" + v.name() + ") has dimension " +
                                 std::to_string(homs.size()));
    // sigma(v, w) = f(v)(w) = v^T F^T w
    Matrix sigma = homs.front().transpose();
    if (rank(sigma) != v.dim()) throw OracleInconsistent("invariant form on " + v.name() + " is degenerate");
    // sigma'(v, w) = sigma(w, g v) = v^T (sigma G)^T w
    Matrix sigma_prime = (sigma * v.act(pivotal.g)).transpose();
    std::size_t k = 0;
    const auto& entries = sigma_prime.entries();
    while (k < entries.size() && entries[k].is_zero()) ++k;
    if (k == entries.size()) throw OracleInconsistent("sigma' vanishes on " + v.name());
    FieldElement mu = sigma.entries()[k] / entries[k];
    if (!(sigma == sigma_prime.scaled(mu)))
        throw OracleInconsistent("sigma is not proportional to sigma' on " + v.name());
    const auto& field = v.algebra().field();
    if (mu == field->one()) return {1, BilinearForm{sigma}};
    if (mu == -field->one()) return {-1, BilinearForm{sigma}};
    throw OracleInconsistent("sign " + mu.to_string() + " on " + v.name() + " is not +1 or -1");
}

AlgebraAnalysis analyze(AlgebraPtr algebra) {
    const auto& h = *algebra;
    Integral integral = normalized_integral(h);
    HausserNillElements hn = hausser_nill(h);
    Vector nu_pl = nu_element(h, integral, hn, TChoice::pl);
    Vector nu_pr = nu_element(h, integral, hn, TChoice::pr);
    PivotalData pl = pivotal_g(h, integral, hn, TChoice::pl);
    PivotalData pr = pivotal_g(h, integral, hn, TChoice::pr);
    if (pl.g != pr.g) throw OracleInconsistent("pivotal element depends on the choice of t");
    return {std::move(algebra), std::move(integral), std::move(hn), std::move(nu_pl), std::move(nu_pr),
            std::move(pl)};
}

IndicatorReport indicator_report(const AlgebraAnalysis& a, const HModule& v) {
    const auto& field = a.algebra->field();
    ModuleReport mr = check_module(v);
    if (!mr.is_module) throw NotIntertwiner(v.name() + " is not an H-module: " + mr.detail);
    IndicatorReport r{v.name(),
                      v.dim(),
                      mr.absolutely_simple,
                      fs_indicator(v, a.nu_pl),
                      fs_indicator(v, a.nu_pr),
                      field->zero(),
                      std::nullopt,
                      !hom_space(v, dual_module(v)).empty(),
                      false,
                      ""};
    EMapResult e_pl = e_map(v, v, a.integral, a.hn, a.pivotal, TChoice::pl);
    EMapResult e_pr = e_map(v, v, a.integral, a.hn, a.pivotal, TChoice::pr);
    r.trace_e = *e_pl.trace;
    bool agree = r.nu_pl == r.nu_pr && r.nu_pl == r.trace_e && *e_pr.trace == r.trace_e;
    if (r.absolutely_simple) {
        r.mu = oracle_classify(v, a.pivotal).mu;
        agree = agree && r.trace_e == field->from_rational(Rational(*r.mu));
        r.status = agree ? "ok" : "mismatch";
    } else {
        r.status = "not absolutely simple (End dimension " + std::to_string(mr.end_dim) + "), classification suppressed";
    }
    r.agree = agree;
    return r;
}

} // namespace quasifs
