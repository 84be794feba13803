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
#include <optional>
#include <string>
#include <vector>

#include "quasifs/cyclotomic.hpp"

namespace quasifs {

/// Finite group by its multiplication table on 0..m-1.
class GroupTable {
public:
    /// Validates associativity and the identity/inverse laws; throws
    /// InvalidGroup. Names default to the indices.
    GroupTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names = {});

    static GroupTable cyclic(std::size_t m);

    std::size_t order() const { return table_.size(); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t identity() const { return identity_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
    std::vector<std::string> names_;
};

/// omega(x, y, z) = zeta_N^exponent(x, y, z), exponents kept in [0, N).
class CocycleTable {
public:
    CocycleTable(GroupTable group, unsigned conductor, std::vector<long> exponents);

    const GroupTable& group() const { return group_; }
    unsigned conductor() const { return conductor_; }
    long exponent(std::size_t x, std::size_t y, std::size_t z) const;
    void set_exponent(std::size_t x, std::size_t y, std::size_t z, long e);
    const std::vector<long>& exponents() const { return exponents_; }

private:
    GroupTable group_;
    unsigned conductor_;
    std::vector<long> exponents_;
};

/// omega(a, b, c) = zeta_m^(q a floor((b + c) / m)) on Z/m, conductor m.
CocycleTable cyclic_cocycle(std::size_t m, std::size_t q);

struct CocycleReport {
    bool normalized = true;
    bool cocycle = true;
    /// First failing (a, b, c) for normalization or (a, b, c, d) for the
    /// cocycle identity.
    std::vector<std::size_t> witness;

    bool ok() const { return normalized && cocycle; }
};

/// Exhaustive check of normalization and
/// omega(b,c,d) omega(a,bc,d) omega(a,b,c) = omega(ab,c,d) omega(a,b,cd).
CocycleReport validate_cocycle(const CocycleTable& omega);

/// (1/|G|) sum_g chi(g^2), chi given on group elements.
FieldElement classical_group_indicator(const GroupTable& g, const std::vector<FieldElement>& chi);

} // namespace quasifs
