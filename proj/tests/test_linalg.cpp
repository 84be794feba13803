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

#include <array>

#include "quasifs/errors.hpp"
#include "quasifs/matrix.hpp"
#include "quasifs/tensor.hpp"
#include "support.hpp"

using namespace quasifs;
using namespace quasifs::test;

namespace {

// The flip on V (x) V as a matrix: e_a (x) e_b -> e_b (x) e_a.
Matrix flip(const FieldPtr& f, std::size_t d) {
    Matrix p(f, d * d, d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) p(b * d + a, a * d + b) = f->one();
    return p;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("solve examples") {
    auto f = field(1);
    auto id = solve(Matrix::identity(f, 2), vec(f, {"3", "-1"}));
    REQUIRE(id);
    CHECK(id->particular == vec(f, {"3", "-1"}));
    CHECK(id->kernel.empty());

    CHECK(!solve(Matrix(f, 2, 2), vec(f, {"1", "0"})));
    auto zero = solve(Matrix(f, 2, 2), vec(f, {"0", "0"}));
    REQUIRE(zero);
    CHECK(zero->kernel.size() == 2);

    auto ones = solve(mat(f, {{"1", "1"}, {"1", "1"}}), vec(f, {"2", "2"}));
    REQUIRE(ones);
    CHECK(ones->particular == vec(f, {"2", "0"}));
    REQUIRE(ones->kernel.size() == 1);
    CHECK(ones->kernel[0] == vec(f, {"-1", "1"}));
    CHECK(!solve(mat(f, {{"1", "1"}, {"1", "1"}}), vec(f, {"1", "2"})));
}

TEST_CASE("solve over Q(zeta_4)") {
    auto f = field(4);
    Matrix a = mat(f, {{"z", "1"}, {"0", "1 + z"}});
    Vector b = vec(f, {"1", "2"});
    auto s = solve(a, b);
    REQUIRE(s);
    CHECK(s->kernel.empty());
    CHECK(a * s->particular == b);
    CHECK_THROWS_AS(solve(a, vec(f, {"1"})), ShapeMismatch);
}

TEST_CASE("rref and rank") {
    auto f = field(1);
    Matrix m = mat(f, {{"0", "2", "4"}, {"1", "1", "1"}, {"1", "2", "3"}});
    CHECK(rank(m) == 2);
    auto pivots = rref_in_place(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m == mat(f, {{"1", "0", "-1"}, {"0", "1", "2"}, {"0", "0", "0"}}));
    auto k = kernel(mat(f, {{"1", "0", "-1"}, {"0", "1", "2"}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == vec(f, {"1", "-2", "1"}));
}

TEST_CASE("canonical basis and coordinates") {
    auto f = field(3);
    auto b1 = canonical_basis(f, 3, {vec(f, {"1", "1", "0"}), vec(f, {"0", "1", "1"})});
    auto b2 = canonical_basis(f, 3, {vec(f, {"1", "2", "1"}), vec(f, {"1", "0", "-1"}), vec(f, {"2", "2", "0"})});
    CHECK(b1 == b2);
    auto c = coordinates(f, 3, b1, vec(f, {"z", "1 + z", "1"}));
    REQUIRE(c);
    CHECK(!coordinates(f, 3, b1, vec(f, {"1", "0", "0"})));
}

TEST_CASE("invert and trace") {
    auto f4 = field(4);
    CHECK(invert(Matrix::identity(f4, 3)) == Matrix::identity(f4, 3));
    CHECK(trace(mat(f4, {{"z", "0"}, {"0", "-z"}})).is_zero());
    CHECK(invert(mat(f4, {{"z", "0"}, {"0", "2"}})) == mat(f4, {{"-z", "0"}, {"0", "1/2"}}));
    CHECK_THROWS_AS(invert(mat(f4, {{"1", "z"}, {"z", "-1"}})), Singular);
    CHECK_THROWS_AS(invert(Matrix(f4, 2, 3)), ShapeMismatch);
    CHECK_THROWS_AS(trace(Matrix(f4, 2, 3)), ShapeMismatch);
}

TEST_CASE("kron layout") {
    auto f = field(1);
    Matrix a = mat(f, {{"1", "2"}, {"3", "4"}});
    Matrix b = mat(f, {{"0", "1"}, {"1", "0"}});
    Matrix k = kron(a, b);
    CHECK(k.rows() == 4);
    // (a (x) b)(i*2+k, j*2+l) = a(i,j) b(k,l)
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t r = 0; r < 2; ++r)
                for (std::size_t s = 0; s < 2; ++s) CHECK(k(i * 2 + r, j * 2 + s) == a(i, j) * b(r, s));
}

TEST_CASE("contract examples") {
    auto f = field(1);
    Tensor a = Tensor::from_matrix(mat(f, {{"1", "2"}, {"3", "4"}}));
    Tensor b = Tensor::from_matrix(mat(f, {{"5", "6"}, {"7", "8"}}));
    std::array<LegPair, 1> mm{LegPair{1, 0}};
    CHECK(contract(a, b, mm).to_matrix() == mat(f, {{"19", "22"}, {"43", "50"}}));
    std::array<LegPair, 2> full{LegPair{0, 0}, LegPair{1, 1}};
    Tensor s = contract(a, b, full);
    CHECK(s.order() == 0);
    CHECK(s[0] == el(f, "70"));
    Tensor o = outer(Tensor::from_vector(f, vec(f, {"1", "2"})), Tensor::from_vector(f, vec(f, {"3", "4", "5"})));
    CHECK(o.legs() == std::vector<std::size_t>{2, 3});
    CHECK(o.to_matrix() == mat(f, {{"3", "4", "5"}, {"6", "8", "10"}}));
    Tensor c = Tensor::from_vector(f, vec(f, {"1", "2", "3"}));
    CHECK_THROWS_AS(contract(a, c, mm), LegMismatch);
}

TEST_CASE("contract is associative on random chains") {
    Random rnd(11);
    auto f = field(3);
    std::array<LegPair, 1> mm{LegPair{1, 0}};
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t p = rnd.index(1, 3), q = rnd.index(1, 3), r = rnd.index(1, 3), s = rnd.index(1, 3);
        Matrix a = rnd.matrix(f, p, q), b = rnd.matrix(f, q, r), c = rnd.matrix(f, r, s);
        Tensor ta = Tensor::from_matrix(a), tb = Tensor::from_matrix(b), tc = Tensor::from_matrix(c);
        Tensor left = contract(contract(ta, tb, mm), tc, mm);
        Tensor right = contract(ta, contract(tb, tc, mm), mm);
        CHECK(left == right);
        CHECK(left.to_matrix() == a * b * c);
    }
}

TEST_CASE("permute") {
    Random rnd(5);
    auto f = field(4);
    Tensor t(f, {2, 3, 2});
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rnd.element(f);
    std::array<std::size_t, 3> cyc{1, 2, 0}, back{2, 0, 1}, swap{1, 0, 2};
    Tensor p = permute(t, cyc);
    CHECK(p.legs() == std::vector<std::size_t>{3, 2, 2});
    std::array<std::size_t, 3> idx{1, 2, 0}, moved{2, 0, 1};
    CHECK(p.at(moved) == t.at(idx));
    CHECK(permute(p, back) == t);
    CHECK(permute(permute(t, swap), swap) == t);
    Matrix m = rnd.matrix(f, 2, 3);
    std::array<std::size_t, 2> tr{1, 0};
    CHECK(permute(Tensor::from_matrix(m), tr).to_matrix() == m.transpose());
}

TEST_CASE("flip matrix agrees with permute") {
    Random rnd(3);
    auto f = field(1);
    for (std::size_t d = 1; d <= 3; ++d) {
        Vector v = rnd.vector(f, d * d);
        Tensor t(f, {d, d}, v);
        std::array<std::size_t, 2> tr{1, 0};
        CHECK(flip(f, d) * v == permute(t, tr).entries());
        CHECK(flip(f, d) * flip(f, d) == Matrix::identity(f, d * d));
    }
}

TEST_CASE("random invert and trace properties") {
    Random rnd(17);
    for (unsigned n : {1u, 4u, 5u}) {
        auto f = field(n);
        for (int trial = 0; trial < 15; ++trial) {
            std::size_t d = rnd.index(1, 4);
            Matrix a = rnd.matrix(f, d, d), b = rnd.matrix(f, d, d);
            CHECK(trace(a * b) == trace(b * a));
            CHECK(trace(a + b) == trace(a) + trace(b));
            CHECK(trace(kron(a, b)) == trace(a) * trace(b));
            if (rank(a) == d) {
                Matrix ai = invert(a);
                CHECK(a * ai == Matrix::identity(f, d));
                CHECK(ai * a == Matrix::identity(f, d));
            }
        }
    }
}

TEST_CASE("twisted trace identity") {
    // tr((f1 (x) f2) o flip o (f3 (x) f4)) = tr(f3 f1 f4 f2)
    Random rnd(2024);
    int cases = 0;
    for (unsigned n : {1u, 3u, 4u, 8u}) {
        auto f = field(n);
        for (std::size_t d = 1; d <= 4; ++d) {
            for (int trial = 0; trial < 8; ++trial) {
                Matrix f1 = rnd.matrix(f, d, d), f2 = rnd.matrix(f, d, d);
                Matrix f3 = rnd.matrix(f, d, d), f4 = rnd.matrix(f, d, d);
                FieldElement lhs = trace(kron(f1, f2) * flip(f, d) * kron(f3, f4));
                FieldElement rhs = trace(f3 * f1 * f4 * f2);
                CHECK(lhs == rhs);
                ++cases;
            }
        }
    }
    CHECK(cases >= 100);
}

}
