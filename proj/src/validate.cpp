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

#include "quasifs/validate.hpp"

#include <algorithm>
#include <functional>

namespace quasifs {

const char* to_string(ValidationLevel level) {
    return level == ValidationLevel::core ? "core" : "strict";
}

bool ValidationReport::ok() const {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

std::vector<std::string> ValidationReport::failed() const {
    std::vector<std::string> out;
    for (const auto& r : results)
        if (!r.passed) out.push_back(r.name);
    return out;
}

const AxiomResult* ValidationReport::find(const std::string& name) const {
    for (const auto& r : results)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

class Checker {
public:
    Checker(const QuasiHopfAlgebra& h, ValidationReport& report) : h_(h), report_(report) {}

    // Runs `body`, which returns the first failing witness or nullopt.
    void check(const std::string& name, ValidationLevel level,
               const std::function<std::optional<std::vector<std::size_t>>()>& body,
               const std::string& detail = {}) {
        AxiomResult r{name, level, true, {}, {}};
        try {
            if (auto w = body()) {
                r.passed = false;
                r.witness = *w;
                r.detail = detail;
            }
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        report_.results.push_back(std::move(r));
    }

    const QuasiHopfAlgebra& h_;
    ValidationReport& report_;
};

std::optional<std::vector<std::size_t>> first_difference(const Tensor& a, const Tensor& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return a.multi_index(i);
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> first_difference(const Vector& a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return std::vector<std::size_t>{i};
    return std::nullopt;
}

using Witness = std::optional<std::vector<std::size_t>>;

} // namespace

ValidationReport validate(const QuasiHopfAlgebra& h, ValidationLevel level) {
    ValidationReport report;
    Checker c(h, report);
    const std::size_t n = h.dim();
    const auto core = ValidationLevel::core;
    const auto strict = ValidationLevel::strict;
    const FieldPtr& F = h.field();

    std::vector<Vector> e;
    for (std::size_t i = 0; i < n; ++i) e.push_back(h.basis(i));
    std::vector<Tensor> delta;
    for (std::size_t i = 0; i < n; ++i) delta.push_back(h.coproduct(e[i]));

    c.check("counit_left", core, [&]() -> Witness {
        for (std::size_t i = 0; i < n; ++i)
            if (!(h.counit_leg(delta[i], 0).to_vector() == e[i])) return std::vector<std::size_t>{i};
        return std::nullopt;
    }, "(eps (x) id) Delta(e_i) != e_i");
    c.check("counit_right", core, [&]() -> Witness {
        for (std::size_t i = 0; i < n; ++i)
            if (!(h.counit_leg(delta[i], 1).to_vector() == e[i])) return std::vector<std::size_t>{i};
        return std::nullopt;
    }, "(id (x) eps) Delta(e_i) != e_i");
    c.check("counit_unital", core, [&]() -> Witness {
        if (!h.counit(h.unit()).is_one()) return std::vector<std::size_t>{};
        return std::nullopt;
    }, "eps(1) != 1");
    c.check("counit_multiplicative", core, [&]() -> Witness {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(h.counit(h.multiply(e[i], e[j])) == h.counit(e[i]) * h.counit(e[j])))
                    return std::vector<std::size_t>{i, j};
        return std::nullopt;
    }, "eps(e_i e_j) != eps(e_i) eps(e_j)");
    c.check("comult_unital", core, [&]() -> Witness {
        return first_difference(h.coproduct(h.unit()), h.one(2));
    }, "Delta(1) != 1 (x) 1");
    c.check("comult_multiplicative", core, [&]() -> Witness {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(h.coproduct(h.multiply(e[i], e[j])) == h.multiply(delta[i], delta[j])))
                    return std::vector<std::size_t>{i, j};
        return std::nullopt;
    }, "Delta(e_i e_j) != Delta(e_i) Delta(e_j)");
    c.check("phi_counit", core, [&]() -> Witness {
        for (std::size_t leg = 0; leg < 3; ++leg)
            if (!(h.counit_leg(h.phi(), leg) == h.one(2))) return std::vector<std::size_t>{leg};
        return std::nullopt;
    }, "epsilon applied to leg of phi is not 1 (x) 1");
    c.check("phi_inverse", core, [&]() -> Witness {
        if (auto w = first_difference(h.multiply(h.phi(), h.phi_inv()), h.one(3))) return w;
        return first_difference(h.multiply(h.phi_inv(), h.phi()), h.one(3));
    }, "phi * phi_inv != 1 (x) 1 (x) 1");
    c.check("antipode_unital", core, [&]() -> Witness {
        return first_difference(h.antipode(h.unit()), h.unit());
    }, "S(1) != 1");
    c.check("antipode_anti_multiplicative", core, [&]() -> Witness {
        std::vector<Vector> s;
        for (std::size_t i = 0; i < n; ++i) s.push_back(h.antipode(e[i]));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!(h.antipode(h.multiply(e[i], e[j])) == h.multiply(s[j], s[i])))
                    return std::vector<std::size_t>{i, j};
        return std::nullopt;
    }, "S(e_i e_j) != S(e_j) S(e_i)");
    c.check("antipode_bijective", core, [&]() -> Witness {
        h.antipode_inverse_matrix();
        return std::nullopt;
    });

    // S(h1) alpha h2 = eps(h) alpha and h1 beta S(h2) = eps(h) beta.
    c.check("quasi_antipode_alpha", core, [&]() -> Witness {
        std::vector<Vector> s_alpha;
        for (std::size_t j = 0; j < n; ++j) s_alpha.push_back(h.multiply(h.antipode(e[j]), h.alpha()));
        for (std::size_t i = 0; i < n; ++i) {
            Vector lhs = h.zero();
            for (std::size_t flat : delta[i].nonzeros()) {
                auto jk = delta[i].multi_index(flat);
                Vector t = h.multiply(s_alpha[jk[0]], e[jk[1]]);
                for (std::size_t q = 0; q < n; ++q) lhs[q].add_product(t[q], delta[i][flat]);
            }
            Vector rhs = h.alpha();
            for (auto& x : rhs) x *= h.counit(e[i]);
            if (!(lhs == rhs)) return std::vector<std::size_t>{i};
        }
        return std::nullopt;
    }, "S(h_(1)) alpha h_(2) != eps(h) alpha");
    c.check("quasi_antipode_beta", core, [&]() -> Witness {
        std::vector<Vector> beta_s;
        for (std::size_t k = 0; k < n; ++k) beta_s.push_back(h.multiply(h.beta(), h.antipode(e[k])));
        for (std::size_t i = 0; i < n; ++i) {
            Vector lhs = h.zero();
            for (std::size_t flat : delta[i].nonzeros()) {
                auto jk = delta[i].multi_index(flat);
                Vector t = h.multiply(e[jk[0]], beta_s[jk[1]]);
                for (std::size_t q = 0; q < n; ++q) lhs[q].add_product(t[q], delta[i][flat]);
            }
            Vector rhs = h.beta();
            for (auto& x : rhs) x *= h.counit(e[i]);
            if (!(lhs == rhs)) return std::vector<std::size_t>{i};
        }
        return std::nullopt;
    }, "h_(1) beta S(h_(2)) != eps(h) beta");
    c.check("quasi_antipode_phi", core, [&]() -> Witness {
        Vector sum = h.zero();
        const Tensor& phi = h.phi();
        for (std::size_t flat : phi.nonzeros()) {
            auto abc = phi.multi_index(flat);
            Vector t = h.multiply(e[abc[0]], h.beta());
            t = h.multiply(t, h.antipode(e[abc[1]]));
            t = h.multiply(t, h.alpha());
            t = h.multiply(t, e[abc[2]]);
            for (std::size_t q = 0; q < n; ++q) sum[q].add_product(t[q], phi[flat]);
        }
        return first_difference(sum, h.unit());
    }, "phi1 beta S(phi2) alpha phi3 != 1");
    c.check("quasi_antipode_phi_inv", core, [&]() -> Witness {
        Vector sum = h.zero();
        const Tensor& psi = h.phi_inv();
        for (std::size_t flat : psi.nonzeros()) {
            auto abc = psi.multi_index(flat);
            Vector t = h.multiply(h.antipode(e[abc[0]]), h.alpha());
            t = h.multiply(t, e[abc[1]]);
            t = h.multiply(t, h.beta());
            t = h.multiply(t, h.antipode(e[abc[2]]));
            for (std::size_t q = 0; q < n; ++q) sum[q].add_product(t[q], psi[flat]);
        }
        return first_difference(sum, h.unit());
    }, "S(phi^-1_1) alpha phi^-1_2 beta S(phi^-1_3) != 1");

    if (level == ValidationLevel::strict) {
        c.check("mult_associative", strict, [&]() -> Witness {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Vector ij = h.multiply(e[i], e[j]);
                    for (std::size_t k = 0; k < n; ++k)
                        if (!(h.multiply(ij, e[k]) == h.multiply(e[i], h.multiply(e[j], e[k]))))
                            return std::vector<std::size_t>{i, j, k};
                }
            return std::nullopt;
        }, "(e_i e_j) e_k != e_i (e_j e_k)");
        c.check("mult_unit", strict, [&]() -> Witness {
            for (std::size_t i = 0; i < n; ++i)
                if (!(h.multiply(h.unit(), e[i]) == e[i]) || !(h.multiply(e[i], h.unit()) == e[i]))
                    return std::vector<std::size_t>{i};
            return std::nullopt;
        }, "1 e_i != e_i or e_i 1 != e_i");
        c.check("quasi_coassociative", strict, [&]() -> Witness {
            for (std::size_t i = 0; i < n; ++i) {
                Tensor lhs = h.multiply(h.coproduct_leg(delta[i], 1), h.phi());
                Tensor rhs = h.multiply(h.phi(), h.coproduct_leg(delta[i], 0));
                if (!(lhs == rhs)) return std::vector<std::size_t>{i};
            }
            return std::nullopt;
        }, "(id (x) Delta) Delta(h) phi != phi (Delta (x) id) Delta(h)");
        c.check("pentagon", strict, [&]() -> Witness {
            Tensor one = Tensor(F, {n}, h.unit());
            Tensor one_phi = outer(one, h.phi());
            Tensor phi_one = outer(h.phi(), one);
            Tensor lhs = h.multiply(h.multiply(one_phi, h.coproduct_leg(h.phi(), 1)), phi_one);
            Tensor rhs = h.multiply(h.coproduct_leg(h.phi(), 2), h.coproduct_leg(h.phi(), 0));
            return first_difference(lhs, rhs);
        }, "(1 (x) phi)(id (x) Delta (x) id)(phi)(phi (x) 1) != (id (x) id (x) Delta)(phi)(Delta (x) id (x) id)(phi)");
    }
    return report;
}

} // namespace quasifs
