/*
   Copyright 2026 jscoh contributors

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

#include "jscoh/field.hpp"

#include <algorithm>
#include <cctype>

namespace jscoh {

// ---------------------------------------------------------------- Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DivisionByZero();
    v_ = mpq_class(num);
    v_ /= mpq_class(den);
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero();
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const {
    return v_.get_str();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::leading() const {
    static const Rational zero;
    return c_.empty() ? zero : c_.back();
}

Polynomial Polynomial::t() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    Polynomial r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    if (s.is_zero()) return Polynomial();
    Polynomial r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(c * s);
    return r;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

Rational Polynomial::eval(const Rational& r) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + *it;
    return acc;
}

PolyDivMod poly_divmod(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> rem(p.coeffs());
    const int dq = q.degree();
    std::vector<Rational> quo;
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr >= dq) quo.assign(dr - dq + 1, Rational());
    const Rational lead_inv = q.leading().inverse();
    while (dr >= dq) {
        if (!rem[dr].is_zero()) {
            Rational f = rem[dr] * lead_inv;
            quo[dr - dq] = f;
            for (int i = 0; i <= dq; ++i) rem[dr - dq + i] -= f * q.coeff(i);
        }
        --dr;
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() && q.is_zero()) throw BothZero();
    Polynomial a = p, b = q;
    while (!b.is_zero()) {
        Polynomial r = poly_divmod(a, b).rem;
        a = b;
        b = r;
    }
    return a.monic();
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        Rational c = coeff(static_cast<std::size_t>(d));
        if (c.is_zero()) continue;
        const bool neg = c.sgn() < 0;
        Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (d == 0) {
            out += mag.str();
        } else {
            if (!mag.is_one()) out += mag.str() + "*";
            out += d == 1 ? "t" : "t^" + std::to_string(d);
        }
    }
    return out;
}

// ------------------------------------------------------------------ Scalar

namespace {

// Reduce num/den: cancel the gcd, make den monic, demote degree-0 cases.
std::variant<Rational, Scalar::Fraction> normalize(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) return Rational();
    Polynomial g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_divmod(num, g).quo;
        den = poly_divmod(den, g).quo;
    }
    Rational lead_inv = den.leading().inverse();
    num = num * lead_inv;
    den = den * lead_inv;
    if (num.degree() <= 0 && den.degree() == 0) return num.coeff(0);
    return Scalar::Fraction{std::move(num), std::move(den)};
}

}  // namespace

Scalar::Scalar(const Polynomial& num, const Polynomial& den) : v_(normalize(num, den)) {}

bool Scalar::is_zero() const {
    return is_constant() && as_rational().is_zero();
}

bool Scalar::is_one() const {
    return is_constant() && as_rational().is_one();
}

Scalar Scalar::operator-() const {
    if (is_constant()) return Scalar(-as_rational());
    const auto& f = as_fraction();
    Scalar r;
    r.v_ = Fraction{-f.num, f.den};
    return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_constant() && b.is_constant()) return Scalar(a.as_rational() + b.as_rational());
    Polynomial an = a.is_constant() ? Polynomial(a.as_rational()) : a.as_fraction().num;
    Polynomial ad = a.is_constant() ? Polynomial(Rational(1)) : a.as_fraction().den;
    Polynomial bn = b.is_constant() ? Polynomial(b.as_rational()) : b.as_fraction().num;
    Polynomial bd = b.is_constant() ? Polynomial(Rational(1)) : b.as_fraction().den;
    return Scalar(an * bd + bn * ad, ad * bd);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    return a + (-b);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_constant() && b.is_constant()) return Scalar(a.as_rational() * b.as_rational());
    if (a.is_zero() || b.is_zero()) return Scalar();
    Polynomial an = a.is_constant() ? Polynomial(a.as_rational()) : a.as_fraction().num;
    Polynomial ad = a.is_constant() ? Polynomial(Rational(1)) : a.as_fraction().den;
    Polynomial bn = b.is_constant() ? Polynomial(b.as_rational()) : b.as_fraction().num;
    Polynomial bd = b.is_constant() ? Polynomial(Rational(1)) : b.as_fraction().den;
    return Scalar(an * bn, ad * bd);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    if (is_constant()) return Scalar(as_rational().inverse());
    const auto& f = as_fraction();
    return Scalar(f.den, f.num);
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar acc(1), base = *this;
    while (e > 0) {
        if (e & 1UL) acc = acc * base;
        base = base * base;
        e >>= 1UL;
    }
    return acc;
}

Rational Scalar::specialize(const Rational& r) const {
    if (is_constant()) return as_rational();
    const auto& f = as_fraction();
    Rational d = f.den.eval(r);
    if (d.is_zero()) throw DenominatorVanishes(r.str());
    return f.num.eval(r) / d;
}

std::string Scalar::str() const {
    if (is_constant()) return as_rational().str();
    const auto& f = as_fraction();
    if (f.den.is_one()) return f.num.str();
    auto wrap = [](const Polynomial& p) {
        std::string s = p.str();
        return "(" + s + ")";
    };
    return wrap(f.num) + "/" + wrap(f.den);
}

// ------------------------------------------------------------------ parser

namespace {

class ScalarParser {
  public:
    explicit ScalarParser(const std::string& text) : s_(text) {}

    Scalar parse() {
        Scalar v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
        return v;
    }

  private:
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            skip_ws();
            if (accept('+')) {
                v = v + term();
            } else if (accept('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v = v * factor();
            } else if (accept('/')) {
                std::size_t at = pos_;
                Scalar d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        skip_ws();
        if (accept('-')) return -factor();
        return power();
    }

    Scalar power() {
        Scalar b = base();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            std::size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected exponent", at);
            unsigned long e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
                if (e > 1000000UL) throw ParseError("exponent too large", at);
                ++pos_;
            }
            return b.pow(e);
        }
        return b;
    }

    Scalar base() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expr();
            skip_ws();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return v;
        }
        if (c == 't') {
            ++pos_;
            return Scalar::t();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return Scalar(Rational(mpz_class(digits), mpz_class(1)));
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text) {
    return ScalarParser(text).parse();
}

Rational parse_rational(const std::string& text) {
    Scalar v = parse_scalar(text);
    if (!v.is_constant()) throw ParseError("expected a rational constant, got '" + text + "'", 0);
    return v.as_rational();
}

}  // namespace jscoh
