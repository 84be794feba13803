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
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "quasifs/rational.hpp"

namespace quasifs {

/// Dense univariate polynomial over Q, coefficients stored low to high with
/// no trailing zeros. The zero polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(std::size_t exponent, Rational coeff = 1);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
    const Rational& leading() const { return coeffs_.back(); }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;

    /// Quotient and remainder; throws DivisionByZero for a zero divisor.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string(char var = 'x') const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// The N-th cyclotomic polynomial, obtained by exact division of x^N - 1 by
/// the cyclotomic polynomials of the proper divisors of N.
Polynomial cyclotomic_polynomial(unsigned n);

class FieldElement;

/// Q(zeta_N) presented as Q[z]/(Phi_N). Instances are shared and immutable.
class CycloField : public std::enable_shared_from_this<CycloField> {
public:
    /// Cached per conductor; N must be positive.
    static std::shared_ptr<const CycloField> get(unsigned conductor);

    unsigned conductor() const { return conductor_; }
    std::size_t degree() const { return degree_; }
    const Polynomial& minimal_polynomial() const { return minpoly_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_rational(const Rational& r) const;
    FieldElement from_polynomial(const Polynomial& p) const;
    /// zeta_N^k, k reduced mod N.
    FieldElement zeta_power(long k) const;

    /// Parses the coefficient grammar, e.g. "-1/2*z^3 + z + 2/7". Exponents
    /// must be below the conductor.
    FieldElement parse(std::string_view text) const;

    // z^k mod Phi_N as a dense vector of length degree(), for k < 2*degree + N.
    const std::vector<Rational>& reduced_power(std::size_t k) const { return powers_[k]; }

    explicit CycloField(unsigned conductor);

private:
    unsigned conductor_;
    std::size_t degree_;
    Polynomial minpoly_;
    std::vector<std::vector<Rational>> powers_;
};

using FieldPtr = std::shared_ptr<const CycloField>;

/// Element of Q(zeta_N) in the power basis 1, z, ..., z^(d-1). Immutable in
/// spirit: all arithmetic returns fresh values.
class FieldElement {
public:
    FieldElement(FieldPtr field, std::vector<Rational> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    /// True when every coefficient above the constant term vanishes.
    bool is_rational() const;
    const Rational& constant_term() const { return coeffs_.front(); }

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);
    FieldElement& operator*=(const Rational& rhs);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    friend FieldElement operator*(FieldElement a, const Rational& b) { return a *= b; }

    /// Fused a += b * c, avoiding a temporary for the hot loops.
    void add_product(const FieldElement& b, const FieldElement& c);

    FieldElement inverse() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);

    std::string to_string() const;

private:
    void check_same_field(const FieldElement& other) const;

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

enum class ArithKind { add, sub, mul, div };

/// Single entry point over the four field operations.
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithKind kind);

inline FieldElement zeta_power(const CycloField& field, long k) { return field.zeta_power(k); }

} // namespace quasifs
