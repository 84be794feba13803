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

#include "quasifs/group.hpp"

#include "quasifs/errors.hpp"

namespace quasifs {

GroupTable::GroupTable(std::vector<std::vector<std::size_t>> table, std::vector<std::string> names)
    : table_(std::move(table)), names_(std::move(names)) {
    const std::size_t m = table_.size();
    if (m == 0) throw InvalidGroup("empty table");
    for (std::size_t a = 0; a < m; ++a) {
        if (table_[a].size() != m) throw InvalidGroup("row " + std::to_string(a) + " has wrong length");
        for (std::size_t b = 0; b < m; ++b)
            if (table_[a][b] >= m) throw InvalidGroup("entry out of range at " + std::to_string(a) + "," + std::to_string(b));
    }
    bool found = false;
    for (std::size_t e = 0; e < m && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < m && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) identity_ = e, found = true;
    }
    if (!found) throw InvalidGroup("no identity element");
    inverse_.assign(m, m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b)
            if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
        if (inverse_[a] == m) throw InvalidGroup("element " + std::to_string(a) + " has no inverse");
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    throw InvalidGroup("not associative at (" + std::to_string(a) + ", " + std::to_string(b) + ", " +
                                       std::to_string(c) + ")");
    if (names_.empty())
        for (std::size_t a = 0; a < m; ++a) names_.push_back(std::to_string(a));
    if (names_.size() != m) throw InvalidGroup("wrong number of element names");
}

GroupTable GroupTable::cyclic(std::size_t m) {
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) t[a][b] = (a + b) % m;
    return GroupTable(std::move(t));
}

CocycleTable::CocycleTable(GroupTable group, unsigned conductor, std::vector<long> exponents)
    : group_(std::move(group)), conductor_(conductor), exponents_(std::move(exponents)) {
    const std::size_t m = group_.order();
    if (conductor_ == 0) throw InvalidCocycle("conductor must be positive");
    if (exponents_.size() != m * m * m)
        throw InvalidCocycle("expected " + std::to_string(m * m * m) + " exponents, got " +
                             std::to_string(exponents_.size()));
    for (auto& e : exponents_) e = ((e % long(conductor_)) + long(conductor_)) % long(conductor_);
}

long CocycleTable::exponent(std::size_t x, std::size_t y, std::size_t z) const {
    const std::size_t m = group_.order();
    return exponents_[(x * m + y) * m + z];
}

void CocycleTable::set_exponent(std::size_t x, std::size_t y, std::size_t z, long e) {
    const std::size_t m = group_.order();
    const long n = long(conductor_);
    exponents_[(x * m + y) * m + z] = ((e % n) + n) % n;
}

CocycleTable cyclic_cocycle(std::size_t m, std::size_t q) {
    std::vector<long> ex(m * m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c) ex[(a * m + b) * m + c] = long(q * a * ((b + c) / m));
    return CocycleTable(GroupTable::cyclic(m), unsigned(m), std::move(ex));
}

CocycleReport validate_cocycle(const CocycleTable& omega) {
    CocycleReport r;
    const GroupTable& g = omega.group();
    const std::size_t m = g.order(), e = g.identity();
    const long n = long(omega.conductor());
    for (std::size_t a = 0; a < m && r.normalized; ++a)
        for (std::size_t b = 0; b < m && r.normalized; ++b)
            for (std::size_t c = 0; c < m && r.normalized; ++c)
                if ((a == e || b == e || c == e) && omega.exponent(a, b, c) != 0) {
                    r.normalized = false;
                    r.witness = {a, b, c};
                }
    if (!r.normalized) return r;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t c = 0; c < m; ++c)
                for (std::size_t d = 0; d < m; ++d) {
                    long lhs = omega.exponent(b, c, d) + omega.exponent(a, g.mul(b, c), d) + omega.exponent(a, b, c);
                    long rhs = omega.exponent(g.mul(a, b), c, d) + omega.exponent(a, b, g.mul(c, d));
                    if ((lhs - rhs) % n != 0) {
                        r.cocycle = false;
                        r.witness = {a, b, c, d};
                        return r;
                    }
                }
    return r;
}

FieldElement classical_group_indicator(const GroupTable& g, const std::vector<FieldElement>& chi) {
    if (chi.size() != g.order()) throw DimensionError("character has wrong length");
    FieldElement sum = chi.front().field()->zero();
    for (std::size_t a = 0; a < g.order(); ++a) sum += chi[g.mul(a, a)];
    return sum * Rational(1, long(g.order()));
}

} // namespace quasifs
