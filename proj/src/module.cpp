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

#include "quasifs/module.hpp"

#include "quasifs/errors.hpp"

namespace quasifs {

HModule::HModule(std::string name, AlgebraPtr parent, std::vector<Matrix> action)
    : name_(std::move(name)), parent_(std::move(parent)), action_(std::move(action)) {
    if (!parent_) throw DimensionError("module '" + name_ + "' has no parent algebra");
    if (action_.size() != parent_->dim())
        throw DimensionError("module '" + name_ + "' has " + std::to_string(action_.size()) +
                             " action matrices, algebra dimension is " + std::to_string(parent_->dim()));
    dim_ = action_.empty() ? 0 : action_[0].rows();
    for (const auto& m : action_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw DimensionError("module '" + name_ + "' action matrices must all be " +
                                 std::to_string(dim_) + "x" + std::to_string(dim_));
}

Matrix HModule::act(const Vector& h) const {
    Matrix out(parent_->field(), dim_, dim_);
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) out += action_[i].scaled(h[i]);
    return out;
}

FieldElement Character::operator()(const Vector& h) const {
    FieldElement s = values.front().field()->zero();
    for (std::size_t i = 0; i < h.size(); ++i)
        if (!h[i].is_zero()) s.add_product(h[i], values[i]);
    return s;
}

Character character(const HModule& v) {
    Character c;
    for (const auto& m : v.action()) c.values.push_back(trace(m));
    return c;
}

ModuleReport check_module(const HModule& m) {
    const auto& h = m.algebra();
    ModuleReport r;
    r.is_module = true;
    if (!(m.act(h.unit()) == Matrix::identity(h.field(), m.dim()))) {
        r.is_module = false;
        r.detail = "rho(1) is not the identity";
    }
    for (std::size_t i = 0; i < h.dim() && r.is_module; ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
            if (!(m.action(i) * m.action(j) == m.act(h.multiply(h.basis(i), h.basis(j))))) {
                r.is_module = false;
                r.detail = "rho(e_" + std::to_string(i) + ") rho(e_" + std::to_string(j) + ") != rho(e_" +
                           std::to_string(i) + " e_" + std::to_string(j) + ")";
                break;
            }
    r.end_dim = hom_space(m, m).size();
    r.absolutely_simple = r.is_module && r.end_dim == 1;
    return r;
}

Matrix act_tensor(const HModule& v, const HModule& w, const Tensor& x) {
    Matrix out(v.algebra().field(), v.dim() * w.dim(), v.dim() * w.dim());
    const std::size_t n = v.algebra().dim();
    for (std::size_t flat : x.nonzeros()) {
        std::size_t a = flat / n, b = flat % n;
        out += kron(v.action(a), w.action(b)).scaled(x[flat]);
    }
    return out;
}

HModule tensor_module(const HModule& v, const HModule& w) {
    if (v.parent() != w.parent()) throw ParentMismatch(v.name() + " and " + w.name());
    const auto& h = v.algebra();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < h.dim(); ++i) action.push_back(act_tensor(v, w, h.coproduct(h.basis(i))));
    return HModule(v.name() + "(x)" + w.name(), v.parent(), std::move(action));
}

HModule dual_module(const HModule& v, DualSide side) {
    const auto& h = v.algebra();
    const Matrix& s = side == DualSide::left ? h.antipode_matrix() : h.antipode_inverse_matrix();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < h.dim(); ++i) action.push_back(v.act(s.column(i)).transpose());
    std::string name = side == DualSide::left ? "*" + v.name() : v.name() + "*";
    return HModule(std::move(name), v.parent(), std::move(action));
}

Matrix flip_matrix(const FieldPtr& field, std::size_t dim_v, std::size_t dim_w) {
    Matrix p(field, dim_v * dim_w, dim_v * dim_w);
    for (std::size_t a = 0; a < dim_v; ++a)
        for (std::size_t b = 0; b < dim_w; ++b) p(b * dim_v + a, a * dim_w + b) = field->one();
    return p;
}

std::vector<Vector> invariant_subspace(const HModule& m, InvariantMethod method) {
    const auto& h = m.algebra();
    const std::size_t d = m.dim();
    if (method == InvariantMethod::projector) {
        Integral lambda = normalized_integral(h);
        Matrix p = m.act(lambda.lambda);
        std::vector<Vector> cols;
        for (std::size_t c = 0; c < d; ++c) cols.push_back(p.column(c));
        return canonical_basis(h.field(), d, cols);
    }
    Matrix system(h.field(), h.dim() * d, d);
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Matrix block = m.action(i) - Matrix::identity(h.field(), d).scaled(h.counit(h.basis(i)));
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) system(i * d + r, c) = block(r, c);
    }
    return canonical_basis(h.field(), d, kernel(system));
}

bool is_invariant(const HModule& m, const Vector& x) {
    const auto& h = m.algebra();
    for (std::size_t i = 0; i < h.dim(); ++i) {
        Vector hx = m.action(i) * x;
        FieldElement eps = h.counit(h.basis(i));
        for (std::size_t r = 0; r < x.size(); ++r)
            if (!(hx[r] == x[r] * eps)) return false;
    }
    return true;
}

std::vector<Matrix> hom_space(const HModule& v, const HModule& w) {
    if (v.parent() != w.parent()) throw ParentMismatch(v.name() + " and " + w.name());
    const auto& h = v.algebra();
    const std::size_t dv = v.dim(), dw = w.dim(), unknowns = dv * dw;
    // X rho_V(e_i) - rho_W(e_i) X = 0 with X (dw x dv) flattened row-major.
    Matrix system(h.field(), h.dim() * unknowns, unknowns);
    for (std::size_t i = 0; i < h.dim(); ++i) {
        const Matrix& rv = v.action(i);
        const Matrix& rw = w.action(i);
        const std::size_t base = i * unknowns;
        for (std::size_t r = 0; r < dw; ++r)
            for (std::size_t c = 0; c < dv; ++c) {
                const std::size_t eq = base + r * dv + c;
                for (std::size_t k = 0; k < dv; ++k)
                    if (!rv(k, c).is_zero()) system(eq, r * dv + k) += rv(k, c);
                for (std::size_t k = 0; k < dw; ++k)
                    if (!rw(r, k).is_zero()) system(eq, k * dv + c) -= rw(r, k);
            }
    }
    std::vector<Matrix> out;
    for (auto& vec : canonical_basis(h.field(), unknowns, kernel(system)))
        out.emplace_back(h.field(), dw, dv, std::move(vec));
    return out;
}

bool is_intertwiner(const HModule& source, const HModule& target, const Matrix& f) {
    if (f.rows() != target.dim() || f.cols() != source.dim()) return false;
    for (std::size_t i = 0; i < source.algebra().dim(); ++i)
        if (!(f * source.action(i) == target.action(i) * f)) return false;
    return true;
}

namespace {

Vector flatten(const Matrix& m) { return m.entries(); }

} // namespace

EvCoev ev_coev(const HModule& v) {
    const auto& h = v.algebra();
    const std::size_t d = v.dim();
    // ev(v^a (x) v_b) = v^a(alpha v_b) = rho(alpha)[a, b]
    Matrix ev(h.field(), 1, d * d, flatten(v.act(h.alpha())));
    // db = sum_i (beta v_i) (x) v^i has coordinate [a, i] = rho(beta)[a, i]
    return {std::move(ev), flatten(v.act(h.beta()))};
}

Matrix adjunction_a(const HModule& v, const HModule& w, const HausserNillElements& hn, const Vector& xi) {
    HModule vw = tensor_module(v, w);
    if (xi.size() != vw.dim() || !is_invariant(vw, xi))
        throw NotInvariant("vector is not in (" + v.name() + "(x)" + w.name() + ")^H");
    Vector eta = act_tensor(v, w, hn.q_l) * xi;
    // A(xi)(v^a) = sum_b eta[a, b] w_b, so the matrix is eta reshaped and transposed.
    Matrix f = Matrix(v.algebra().field(), v.dim(), w.dim(), std::move(eta)).transpose();
    if (!is_intertwiner(dual_module(v), w, f))
        throw NotIntertwiner("A(xi) fails to be H-linear from *" + v.name() + " to " + w.name());
    return f;
}

Vector adjunction_a_inv(const HModule& v, const HModule& w, const Matrix& f) {
    const auto& h = v.algebra();
    if (!is_intertwiner(dual_module(v), w, f))
        throw NotIntertwiner("map is not H-linear from *" + v.name() + " to " + w.name());
    // sum_i beta v_i (x) f(v^i): coordinate [a, b] = (rho(beta) f^T)[a, b]
    Vector xi = flatten(v.act(h.beta()) * f.transpose());
    if (!is_invariant(tensor_module(v, w), xi))
        throw NotInvariant("A^-1(f) is not invariant");
    return xi;
}

} // namespace quasifs
