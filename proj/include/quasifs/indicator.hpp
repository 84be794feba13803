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

#include <optional>
#include <string>
#include <vector>

#include "quasifs/group.hpp"
#include "quasifs/integral.hpp"
#include "quasifs/module.hpp"

namespace quasifs {

enum class PivotalMethod { beta_invertible, linear_system };

const char* to_string(PivotalMethod m);

/// The pivotal element g with pivot(v) = iota(g v).
struct PivotalData {
    Vector g;
    Vector g_inv;
    PivotalMethod method;
};

/// S(Lambda_(1) t1) Lambda_(2) t2, the right-hand side of the element form
/// of the pivotal identity.
Vector pivotal_rhs(const QuasiHopfAlgebra& h, const Integral& integral, const Tensor& t);

/// Computes g with the requested method. beta_invertible: g^-1 =
/// pivotal_rhs * S(beta)^-1 (throws NoUniqueSolution when beta is not a
/// unit). linear_system: solves sum_i beta v^i (x) x v_i =
/// Lambda_(1) t1 v^i (x) Lambda_(2) t2 v_i on the regular module for the
/// unknown x = g^-1 and requires a unique solution. Throws Singular when the
/// solution is not invertible.
PivotalData pivotal_g(const QuasiHopfAlgebra& h, const Integral& integral, const HausserNillElements& hn,
                      TChoice t, PivotalMethod method);

/// Runs linear_system, and beta_invertible when S(beta) is a unit; the two
/// must agree (OracleInconsistent otherwise). Reports beta_invertible when
/// it applied.
PivotalData pivotal_g(const QuasiHopfAlgebra& h, const Integral& integral, const HausserNillElements& hn,
                      TChoice t);

/// Both sides of beta v^i (x) g^-1 v_i = Lambda_(1) t1 v^i (x) Lambda_(2) t2 v_i
/// in *V (x) V coordinates, the left legs carrying the dual action.
struct PivotalSides {
    Vector lhs;
    Vector rhs;
};

PivotalSides pivotal_tensor_sides(const HModule& v, const PivotalData& pivotal, const Integral& integral,
                                const Tensor& t);

/// pivot_V = iota o (g .): V -> **V; in coordinates this is rho_V(g).
Matrix pivotal_map(const HModule& v, const PivotalData& pivotal);

/// ev_{*V} o (f (x) *V) o db_V for f: V -> **V, composed literally.
FieldElement categorical_trace(const HModule& v, const Matrix& f);

/// chi_V(nu_H).
FieldElement fs_indicator(const HModule& v, const Vector& nu_h);

/// T(f) = pivot_V^-1 o *f : *W -> V for f: *V -> W.
Matrix t_map(const HModule& v, const HModule& w, const Matrix& f, const PivotalData& pivotal);

struct EMapResult {
    std::vector<Vector> source_basis;   // (V (x) W)^H
    std::vector<Vector> target_basis;   // (W (x) V)^H
    Matrix matrix;                      // E in those bases
    std::optional<FieldElement> trace;          // V == W only
    std::optional<FieldElement> trace_full;     // tr E' on V (x) V, V == W only
    std::optional<FieldElement> chi_nu;         // chi_V(nu_H), V == W only
};

/// E_VW = A^-1 o T o A on (V (x) W)^H, compared against the explicit
/// composite pi o (t .) o flip o (q_L .). Throws OracleInconsistent when the
/// two constructions or the three traces disagree.
EMapResult e_map(const HModule& v, const HModule& w, const Integral& integral, const HausserNillElements& hn,
                 const PivotalData& pivotal, TChoice t);

/// sigma(v, w) = v^T form w.
struct BilinearForm {
    Matrix form;
};

struct OracleResult {
    int mu = 0;
    std::optional<BilinearForm> certificate;
};

/// Classifies a simple V from Hom_H(V, *V) and g alone: mu = 0 when the
/// space is zero, otherwise the sign with sigma(v, w) = mu sigma(w, g v).
/// Throws OracleInconsistent if no such sign in {+1, -1} exists.
OracleResult oracle_classify(const HModule& v, const PivotalData& pivotal);

/// Per-algebra data shared by all module computations.
struct AlgebraAnalysis {
    AlgebraPtr algebra;
    Integral integral;
    HausserNillElements hn;
    Vector nu_pl;
    Vector nu_pr;
    PivotalData pivotal;
};

/// Integral, Hausser-Nill elements, nu_H for both t and g. Throws
/// OracleInconsistent when the two choices of t give different g.
AlgebraAnalysis analyze(AlgebraPtr algebra);

struct IndicatorReport {
    std::string module;
    std::size_t dim = 0;
    bool absolutely_simple = false;
    FieldElement nu_pl;
    FieldElement nu_pr;
    FieldElement trace_e;
    /// Empty when classification is suppressed (module not absolutely simple).
    std::optional<int> mu;
    bool self_dual = false;
    bool agree = false;
    std::string status;
};

/// nu_V for both t, tr(E_VV) for both t and the oracle sign. Errors from the
/// internal consistency checks propagate.
IndicatorReport indicator_report(const AlgebraAnalysis& a, const HModule& v);

} // namespace quasifs
