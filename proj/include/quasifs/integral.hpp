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

#include "quasifs/algebra.hpp"

namespace quasifs {

/// Normalized integral: h Lambda = eps(h) Lambda for all h, eps(Lambda) = 1.
struct Integral {
    Vector lambda;
};

/// Solves the left-integral system exactly. Throws NoIntegral (no nonzero
/// left integral), AmbiguousIntegral (solution space of dimension > 1) or
/// NotNormalizable (eps vanishes on the integrals, i.e. H is not semisimple).
Integral normalized_integral(const QuasiHopfAlgebra& h);

/// Exact inverse of the antipode matrix; throws Singular.
Matrix antipode_inverse(const QuasiHopfAlgebra& h);

/// The four Hausser-Nill elements of H (x) H:
///   q_R = phi1 (x) S^-1(alpha phi3) phi2
///   p_R = psi1 (x) psi2 beta S(psi3)
///   q_L = S(psi1) alpha psi2 (x) psi3
///   p_L = phi2 S^-1(phi1 beta) (x) phi3
/// with phi = phi1 (x) phi2 (x) phi3 and phi^-1 = psi1 (x) psi2 (x) psi3.
struct HausserNillElements {
    Tensor q_r;
    Tensor p_r;
    Tensor q_l;
    Tensor p_l;
};

HausserNillElements hausser_nill(const QuasiHopfAlgebra& h);

enum class TChoice { pl, pr };

const char* to_string(TChoice t);
const Tensor& select(const HausserNillElements& hn, TChoice t);

/// S(t1) alpha t2 for an element t of H (x) H.
Vector antipode_alpha_pairing(const QuasiHopfAlgebra& h, const Tensor& t);

/// nu_H = nabla(q_L Delta(Lambda) t), product taken in H (x) H.
Vector nu_element(const QuasiHopfAlgebra& h, const Integral& integral, const HausserNillElements& hn,
                  TChoice t);
Vector nu_element(const QuasiHopfAlgebra& h, const Integral& integral, TChoice t);

} // namespace quasifs
