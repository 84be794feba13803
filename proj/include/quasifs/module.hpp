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
#include <memory>
#include <string>
#include <vector>

#include "quasifs/algebra.hpp"
#include "quasifs/integral.hpp"

namespace quasifs {

using AlgebraPtr = std::shared_ptr<const QuasiHopfAlgebra>;

/// Left H-module on k^d given by the action matrices rho(e_i). The standard
/// coordinate basis v_1..v_d and its dual basis are the canonical bases.
class HModule {
public:
    /// Throws DimensionError unless there are n square matrices of equal size.
    HModule(std::string name, AlgebraPtr parent, std::vector<Matrix> action);

    const std::string& name() const { return name_; }
    const AlgebraPtr& parent() const { return parent_; }
    const QuasiHopfAlgebra& algebra() const { return *parent_; }
    std::size_t dim() const { return dim_; }
    const std::vector<Matrix>& action() const { return action_; }
    const Matrix& action(std::size_t i) const { return action_[i]; }

    /// rho(h) for an element h of H.
    Matrix act(const Vector& h) const;

private:
    std::string name_;
    AlgebraPtr parent_;
    std::size_t dim_ = 0;
    std::vector<Matrix> action_;
};

/// chi(e_i) = trace(rho(e_i)).
struct Character {
    Vector values;

    FieldElement operator()(const Vector& h) const;
};

Character character(const HModule& v);

struct ModuleReport {
    bool is_module = false;
    std::size_t end_dim = 0;
    bool absolutely_simple = false;
    std::string detail;
};

ModuleReport check_module(const HModule& m);

/// rho_{V (x) W}(x) for x in H (x) H, acting on coordinates (a, b) -> a*dim W + b.
Matrix act_tensor(const HModule& v, const HModule& w, const Tensor& x);

/// Diagonal structure h (v (x) w) = h_(1) v (x) h_(2) w. Throws ParentMismatch.
HModule tensor_module(const HModule& v, const HModule& w);

enum class DualSide { left, right };

/// Left dual: rho(h) = rho_V(S(h))^T. Right dual: rho(h) = rho_V(S^-1(h))^T.
HModule dual_module(const HModule& v, DualSide side = DualSide::left);

/// Permutation matrix of the flip V (x) W -> W (x) V.
Matrix flip_matrix(const FieldPtr& field, std::size_t dim_v, std::size_t dim_w);

enum class InvariantMethod { kernel, projector };

/// Basis of M^H in canonical echelon form. The kernel method solves
/// (rho(e_i) - eps(e_i)) x = 0; the projector method spans the image of
/// rho(Lambda), which needs the normalized integral (errors propagate).
std::vector<Vector> invariant_subspace(const HModule& m, InvariantMethod method);
bool is_invariant(const HModule& m, const Vector& x);

/// Basis of Hom_H(V, W) as dim W x dim V matrices, canonical echelon order.
std::vector<Matrix> hom_space(const HModule& v, const HModule& w);
bool is_intertwiner(const HModule& source, const HModule& target, const Matrix& f);

/// ev: *V (x) V -> k, phi (x) v -> phi(alpha v), as a 1 x d^2 row on the
/// coordinates of *V (x) V. db: 1 -> beta v_i (x) v^i, as a vector in
/// V (x) *V coordinates.
struct EvCoev {
    Matrix ev;
    Vector db;
};

EvCoev ev_coev(const HModule& v);

/// A: (V (x) W)^H -> Hom_H(*V, W), A(v (x) w)(phi) = phi(q_L1 v) q_L2 w.
/// Throws NotInvariant for xi outside the invariants.
Matrix adjunction_a(const HModule& v, const HModule& w, const HausserNillElements& hn, const Vector& xi);

/// A^-1(f) = beta v_i (x) f(v^i). Throws NotIntertwiner when f is not
/// H-linear from *V to W.
Vector adjunction_a_inv(const HModule& v, const HModule& w, const Matrix& f);

} // namespace quasifs
