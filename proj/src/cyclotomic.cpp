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

#include "quasifs/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <ostream>

#include "quasifs/errors.hpp"

namespace quasifs {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t exponent, Rational coeff) {
    std::vector<Rational> c(exponent + 1);
    c[exponent] = std::move(coeff);
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    return a + b.scaled(-1);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& x : out) x *= c;
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    const int db = b.degree();
    if (a.degree() < db) return {Polynomial(), a};
    std::vector<Rational> quot(a.coeffs_.size() - db);
    const Rational lead_inv = b.leading().inverse();
    for (int k = static_cast<int>(rem.size()) - 1; k >= db; --k) {
        if (rem[k].is_zero()) continue;
        Rational q = rem[k] * lead_inv;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
        quot[k - db] = std::move(q);
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::string Polynomial::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c.is_zero()) continue;
        bool negative = c.sign() < 0;
        Rational mag = c.abs();
        std::string term;
        if (k == 0) {
            term = mag.to_string();
        } else {
            if (!mag.is_one()) term = mag.to_string() + "*";
            term += var;
            if (k > 1) term += "^" + std::to_string(k);
        }
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out;
}

Polynomial cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw DimensionError("cyclotomic polynomial needs N >= 1");
    static std::mutex mu;
    static std::map<unsigned, Polynomial> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    Polynomial numerator = Polynomial::monomial(n) - Polynomial::monomial(0);
    Polynomial divisor = Polynomial::monomial(0);
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) divisor = divisor * cyclotomic_polynomial(d);
    auto [q, r] = Polynomial::divmod(numerator, divisor);
    if (!r.is_zero()) throw Error("cyclotomic division left a remainder");
    std::lock_guard lock(mu);
    cache.emplace(n, q);
    return q;
}

// ---------------------------------------------------------------- CycloField

CycloField::CycloField(unsigned conductor)
    : conductor_(conductor), minpoly_(cyclotomic_polynomial(conductor)) {
    degree_ = static_cast<std::size_t>(minpoly_.degree());
    const std::size_t count = 2 * degree_ + conductor_;
    powers_.reserve(count);
    std::vector<Rational> cur(degree_);
    cur[0] = 1;
    for (std::size_t k = 0; k < count; ++k) {
        if (k < degree_) {
            std::vector<Rational> e(degree_);
            e[k] = 1;
            powers_.push_back(std::move(e));
            continue;
        }
        // z^k = z * z^(k-1); shift and fold the overflow through Phi_N.
        const auto& prev = powers_.back();
        std::vector<Rational> next(degree_);
        Rational top = prev[degree_ - 1];
        for (std::size_t i = degree_ - 1; i > 0; --i) next[i] = prev[i - 1];
        for (std::size_t i = 0; i < degree_; ++i) next[i] -= top * minpoly_.coeff(i);
        powers_.push_back(std::move(next));
    }
}

std::shared_ptr<const CycloField> CycloField::get(unsigned conductor) {
    if (conductor == 0) throw DimensionError("conductor must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const CycloField>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[conductor];
    if (!slot) slot = std::make_shared<const CycloField>(conductor);
    return slot;
}

FieldElement CycloField::zero() const {
    return FieldElement(shared_from_this(), std::vector<Rational>(degree_));
}

FieldElement CycloField::one() const { return from_rational(1); }

FieldElement CycloField::from_rational(const Rational& r) const {
    std::vector<Rational> c(degree_);
    c[0] = r;
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement CycloField::from_polynomial(const Polynomial& p) const {
    auto [q, r] = Polynomial::divmod(p, minpoly_);
    std::vector<Rational> c(degree_);
    for (std::size_t i = 0; i < r.coeffs().size(); ++i) c[i] = r.coeffs()[i];
    return FieldElement(shared_from_this(), std::move(c));
}

FieldElement CycloField::zeta_power(long k) const {
    long n = static_cast<long>(conductor_);
    long r = ((k % n) + n) % n;
    return FieldElement(shared_from_this(), powers_[static_cast<std::size_t>(r)]);
}

namespace {

struct TermParser {
    std::string s;
    std::size_t pos = 0;

    bool done() const { return pos >= s.size(); }
    char peek() const { return done() ? '\0' : s[pos]; }

    std::string digits() {
        std::size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return s.substr(start, pos - start);
    }
};

} // namespace

FieldElement CycloField::parse(std::string_view text) const {
    TermParser p;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) p.s.push_back(c);
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("coefficient '" + std::string(text) + "': " + why);
    };
    if (p.s.empty()) throw fail("empty expression");

    std::vector<Rational> acc(2 * degree_ + conductor_);
    bool first = true;
    while (!p.done()) {
        int sign = 1;
        if (p.peek() == '+' || p.peek() == '-') {
            sign = p.peek() == '-' ? -1 : 1;
            ++p.pos;
        } else if (!first) {
            throw fail("expected '+' or '-' at offset " + std::to_string(p.pos));
        }
        first = false;

        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
            std::string num = p.digits();
            std::string den = "1";
            if (p.peek() == '/') {
                ++p.pos;
                den = p.digits();
                if (den.empty()) throw fail("missing denominator");
            }
            coeff = Rational::parse(num + "/" + den);
            have_coeff = true;
        }
        std::size_t exponent = 0;
        bool have_z = false;
        if (have_coeff && p.peek() == '*') {
            ++p.pos;
            if (p.peek() != 'z') throw fail("expected 'z' after '*'");
        }
        if (p.peek() == 'z') {
            ++p.pos;
            have_z = true;
            exponent = 1;
            if (p.peek() == '^') {
                ++p.pos;
                std::string e = p.digits();
                if (e.empty() || e.size() > 9) throw fail("bad exponent");
                exponent = std::stoul(e);
            }
        }
        if (!have_coeff && !have_z) throw fail("expected a term at offset " + std::to_string(p.pos));
        if (exponent >= conductor_)
            throw fail("exponent " + std::to_string(exponent) + " must be below conductor " +
                       std::to_string(conductor_));
        const auto& basis = powers_[exponent];
        coeff *= Rational(sign);
        for (std::size_t i = 0; i < degree_; ++i)
            if (!basis[i].is_zero()) acc[i] += coeff * basis[i];
    }
    acc.resize(degree_);
    return FieldElement(shared_from_this(), std::move(acc));
}

// -------------------------------------------------------------- FieldElement

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw FieldMismatch("element without a field");
    if (coeffs_.size() != field_->degree())
        throw DimensionError("element needs " + std::to_string(field_->degree()) + " coefficients");
}

bool FieldElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

bool FieldElement::is_one() const { return is_rational() && coeffs_[0].is_one(); }

void FieldElement::check_same_field(const FieldElement& other) const {
    if (field_ != other.field_ && field_->conductor() != other.field_->conductor())
        throw FieldMismatch("Q(zeta_" + std::to_string(field_->conductor()) + ") vs Q(zeta_" +
                            std::to_string(other.field_->conductor()) + ")");
}

FieldElement FieldElement::operator-() const {
    FieldElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

FieldElement& FieldElement::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

namespace {

// Product of two reduced coefficient vectors, added into out (length d).
void multiply_into(const CycloField& f, const std::vector<Rational>& a,
                   const std::vector<Rational>& b, std::vector<Rational>& out) {
    const std::size_t d = f.degree();
    if (d == 1) {
        out[0] += a[0] * b[0];
        return;
    }
    std::vector<Rational> raw(2 * d - 1);
    bool any = false;
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j].is_zero()) continue;
            raw[i + j] += a[i] * b[j];
            any = true;
        }
    }
    if (!any) return;
    for (std::size_t i = 0; i < d; ++i) out[i] += raw[i];
    for (std::size_t k = d; k < raw.size(); ++k) {
        if (raw[k].is_zero()) continue;
        const auto& red = f.reduced_power(k);
        for (std::size_t i = 0; i < d; ++i)
            if (!red[i].is_zero()) out[i] += raw[k] * red[i];
    }
}

} // namespace

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    std::vector<Rational> out(coeffs_.size());
    multiply_into(*field_, coeffs_, rhs.coeffs_, out);
    coeffs_ = std::move(out);
    return *this;
}

void FieldElement::add_product(const FieldElement& b, const FieldElement& c) {
    check_same_field(b);
    check_same_field(c);
    multiply_into(*field_, b.coeffs_, c.coeffs_, coeffs_);
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    if (is_rational()) return field_->from_rational(coeffs_[0].inverse());
    // Extended Euclid: find s with s*a = 1 mod Phi_N.
    Polynomial r0 = field_->minimal_polynomial();
    Polynomial r1{std::vector<Rational>(coeffs_)};
    Polynomial s0, s1 = Polynomial::monomial(0);
    while (!r1.is_zero()) {
        auto [q, r] = Polynomial::divmod(r0, r1);
        Polynomial s = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.degree() != 0) throw Error("minimal polynomial is not irreducible");
    return field_->from_polynomial(s0.scaled(r0.leading().inverse()));
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    a.check_same_field(b);
    return a.coeffs_ == b.coeffs_;
}

std::string FieldElement::to_string() const {
    return Polynomial(coeffs_).to_string('z');
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) {
    return os << x.to_string();
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithKind kind) {
    switch (kind) {
    case ArithKind::add: return a + b;
    case ArithKind::sub: return a - b;
    case ArithKind::mul: return a * b;
    case ArithKind::div: return a / b;
    }
    throw Error("unknown arithmetic kind");
}

} // namespace quasifs
