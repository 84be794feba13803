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
#include <string>
#include <vector>

#include "quasifs/algebra.hpp"

namespace quasifs {

enum class ValidationLevel { core, strict };

const char* to_string(ValidationLevel level);

struct AxiomResult {
    std::string name;
    ValidationLevel level;
    bool passed = true;
    /// Basis index tuple at which the equation first fails (empty on pass).
    std::vector<std::size_t> witness;
    std::string detail;
};

struct ValidationReport {
    std::vector<AxiomResult> results;

    bool ok() const;
    std::vector<std::string> failed() const;
    const AxiomResult* find(const std::string& name) const;
};

/// Checks the axiom equations exactly. Core covers counit, multiplicativity
/// of epsilon and Delta, the counit legs of phi, invertibility of phi,
/// the anti-algebra property and bijectivity of S, and the four quasi-antipode
/// equations. Strict additionally checks associativity, the unit, quasi-
/// coassociativity and the pentagon. Failures are entries, never exceptions.
ValidationReport validate(const QuasiHopfAlgebra& h, ValidationLevel level);

} // namespace quasifs
