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

#include <vector>

#include "quasifs/group.hpp"
#include "quasifs/module.hpp"

namespace quasifs {

/// k[G] over Q(zeta_N): Delta(g) = g (x) g, eps = 1, phi = 1 (x) 1 (x) 1,
/// S(g) = g^-1, alpha = beta = 1.
AlgebraPtr build_group_algebra(const GroupTable& g, unsigned conductor);

/// k^G_omega on the basis delta_g over Q(zeta_N), N the cocycle conductor.
/// alpha and beta come from quasi_antipode_complete. Throws InvalidCocycle
/// or CompletionFailed.
AlgebraPtr build_twisted_dual(const CocycleTable& omega);

struct QuasiAntipode {
    Vector alpha;
    Vector beta;
};

/// Finds alpha, beta for the supplied S (alpha and beta in `data` are
/// ignored). Both are solved from their linear conditions; then for fixed
/// candidates of one the two phi-normalizations are linear in the other.
/// Throws CompletionFailed when no candidate yields a valid pair.
QuasiAntipode quasi_antipode_complete(const QuasiHopfData& data);

/// The one-dimensional modules k_g of k^G_omega: delta_h acts by [h = g].
std::vector<HModule> dual_group_simples(const AlgebraPtr& algebra, const GroupTable& g);

} // namespace quasifs
