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

#include "doctest.h"

#include "quasifs/builders.hpp"
#include "quasifs/errors.hpp"
#include "quasifs/group.hpp"
#include "quasifs/validate.hpp"
#include "support.hpp"

using namespace quasifs;
using namespace quasifs::test;

TEST_SUITE("builders") {

TEST_CASE("group table validation") {
    CHECK_NOTHROW(GroupTable({{0, 1}, {1, 0}}));
    CHECK_THROWS_AS(GroupTable({{0, 1}, {1, 1}}), InvalidGroup);
    CHECK_THROWS_AS(GroupTable({{0, 1}, {0, 1}}), InvalidGroup);
    CHECK_THROWS_AS(GroupTable({{0, 1}, {1, 0}}, {"e"}), InvalidGroup);
    CHECK_THROWS_AS(GroupTable({{0, 2}, {1, 0}}), InvalidGroup);
    // a Latin square that is not associative
    CHECK_THROWS_AS(GroupTable({{0, 1, 2, 3, 4},
                                {1, 0, 3, 4, 2},
                                {2, 4, 0, 1, 3},
                                {3, 2, 4, 0, 1},
                                {4, 3, 1, 2, 0}}),
                    InvalidGroup);
    GroupTable z6 = GroupTable::cyclic(6);
    CHECK(z6.identity() == 0);
    CHECK(z6.inverse(2) == 4);
    CHECK(z6.mul(4, 5) == 3);
    CHECK(z6.names()[5] == "5");
}

TEST_CASE("cyclic cocycles") {
    for (std::size_t m : {2u, 3u, 4u, 5u, 6u}) {
        for (std::size_t q = 0; q < m; ++q) {
            CocycleTable w = cyclic_cocycle(m, q);
            CHECK(validate_cocycle(w).ok());
            for (std::size_t a = 0; a < m; ++a)
                for (std::size_t b = 0; b < m; ++b)
                    for (std::size_t c = 0; c < m; ++c)
                        CHECK(w.exponent(a, b, c) == long((q * a * ((b + c) / m)) % m));
        }
    }
    CocycleTable w = cyclic_cocycle(4, 1);
    CHECK(w.exponent(1, 3, 1) == 1);
    CHECK(w.exponent(3, 1, 1) == 0);
}

TEST_CASE("mutated cocycle fails with a witness") {
    CocycleTable w = cyclic_cocycle(4, 1);
    w.set_exponent(1, 2, 3, w.exponent(1, 2, 3) + 1);
    CocycleReport r = validate_cocycle(w);
    CHECK(!r.ok());
    CHECK(r.normalized);
    CHECK(!r.cocycle);
    CHECK(r.witness.size() == 4);

    CocycleTable u = cyclic_cocycle(3, 0);
    u.set_exponent(0, 1, 2, 1);
    CocycleReport s = validate_cocycle(u);
    CHECK(!s.normalized);
    CHECK(s.witness == std::vector<std::size_t>{0, 1, 2});
    CHECK_THROWS_AS(build_twisted_dual(u), InvalidCocycle);
    CHECK_THROWS_AS(build_twisted_dual(w), InvalidCocycle);
}

TEST_CASE("exponents reduce modulo the conductor") {
    std::vector<long> ex(8, 0);
    ex[7] = -1;
    CocycleTable w(GroupTable::cyclic(2), 2, ex);
    CHECK(w.exponent(1, 1, 1) == 1);
    CHECK_THROWS_AS(CocycleTable(GroupTable::cyclic(2), 2, std::vector<long>(7, 0)), InvalidCocycle);
}

TEST_CASE("group algebra builder reproduces the corpus") {
    for (std::size_t m = 2; m <= 8; ++m) {
        CAPTURE(m);
        AlgebraPtr h = build_group_algebra(GroupTable::cyclic(m), unsigned(m));
        Bundle b = load("z" + std::to_string(m));
        CHECK(h->data().mult == b.data.mult);
        CHECK(h->data().comult == b.data.comult);
        CHECK(h->data().antipode == b.data.antipode);
        CHECK(h->data().basis_names == b.data.basis_names);
        CHECK(validate(*h, ValidationLevel::strict).ok());
    }
}

TEST_CASE("twisted dual builder") {
    for (std::size_t m : {2u, 3u, 4u, 6u}) {
        for (std::size_t q = 0; q < m; ++q) {
            CAPTURE(m);
            CAPTURE(q);
            AlgebraPtr h = build_twisted_dual(cyclic_cocycle(m, q));
            CHECK(h->dim() == m);
            CHECK(h->data().basis_names[1] == "delta_1");
            ValidationReport r = validate(*h, ValidationLevel::strict);
            CHECK(r.ok());
        }
    }
}

TEST_CASE("quasi-antipode completion") {
    // group algebras: alpha = beta = 1 is found first
    for (const auto& name : group_algebra_names()) {
        CAPTURE(name);
        QuasiAntipode qa = quasi_antipode_complete(load(name).data);
        Bundle b = load(name);
        CHECK(qa.alpha == b.data.unit);
        CHECK(qa.beta == b.data.unit);
    }
    for (const auto& name : twisted_dual_names()) {
        CAPTURE(name);
        QuasiHopfData d = load(name).data;
        QuasiAntipode qa = quasi_antipode_complete(d);
        d.alpha = qa.alpha;
        d.beta = qa.beta;
        ValidationReport r = validate(QuasiHopfAlgebra(d), ValidationLevel::core);
        for (const char* axiom : {"quasi_antipode_alpha", "quasi_antipode_beta", "quasi_antipode_phi",
                                  "quasi_antipode_phi_inv"}) {
            CAPTURE(axiom);
            REQUIRE(r.find(axiom));
            CHECK(r.find(axiom)->passed);
        }
    }
}

TEST_CASE("completion fails without a valid pair") {
    QuasiHopfData d = load("z2w1").data;
    d.antipode = Matrix(d.field, 2, 2);
    CHECK_THROWS_AS(quasi_antipode_complete(d), CompletionFailed);
}

TEST_CASE("simples of a twisted dual") {
    for (const auto& name : twisted_dual_names()) {
        CAPTURE(name);
        Bundle b = load(name);
        REQUIRE(b.group);
        const GroupTable& g = b.group->table;
        auto simples = dual_group_simples(b.algebra, g);
        REQUIRE(simples.size() == g.order());
        for (std::size_t x = 0; x < g.order(); ++x) {
            CHECK(simples[x].name() == "k_" + g.names()[x]);
            CHECK(simples[x].dim() == 1);
            CHECK(check_module(simples[x]).absolutely_simple);
            for (std::size_t y = 0; y < g.order(); ++y) CHECK(simples[x].action(y)(0, 0).is_one() == (x == y));
            // *k_g = k_{g^-1}
            HModule d = dual_module(simples[x]);
            for (std::size_t y = 0; y < g.order(); ++y) {
                CHECK(hom_space(d, simples[y]).size() == (y == g.inverse(x) ? 1u : 0u));
            }
        }
    }
}

}
