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

/*
 * Exact scalar arithmetic for Q and the univariate rational-function
 * field Q(t).
 *
 * Canonical forms, everywhere and always:
 *   Rational    gcd(|num|, den) = 1, den > 0 (delegated to GMP).
 *   Polynomial  no trailing zero coefficients; zero = empty sequence.
 *   Scalar      either a plain Rational (constant case) or a reduced
 *               fraction num/den of polynomials with den monic; a
 *               fraction that collapses to degree 0 / degree 0 is
 *               demoted to the constant case.
 *
 * Equality of Scalars is therefore componentwise equality of the
 * canonical representations.
 */

#ifndef JSCOH_FIELD_HPP
#define JSCOH_FIELD_HPP

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "jscoh/errors.hpp"

namespace jscoh {

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, unsigned long d) : v_(n, d) { v_.canonicalize(); }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den);

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sgn() const { return ::sgn(v_); }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const;
    std::string str() const;

  private:
    mpq_class v_;
};

/// Dense univariate polynomial over Q; coefficient index = degree of t.
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(const Rational& c);
    explicit Polynomial(std::vector<Rational> coeffs);

    /// Degree, with deg 0 = -1 by convention.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    const Rational& leading() const;
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator*(const Rational& s) const;
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return a.c_ != b.c_; }

    Polynomial monic() const;
    Rational eval(const Rational& r) const;
    static Polynomial t();

    std::string str() const;

  private:
    void trim();
    std::vector<Rational> c_;  // c_[i] * t^i, trailing entry nonzero
};

/// Euclidean division p = q * quo + rem with deg rem < deg q.
struct PolyDivMod {
    Polynomial quo, rem;
};
PolyDivMod poly_divmod(const Polynomial& p, const Polynomial& q);

/// Monic gcd via the Euclidean algorithm. Throws BothZero on gcd(0, 0).
Polynomial poly_gcd(const Polynomial& p, const Polynomial& q);

/// Element of Q or Q(t); see the canonical-form notes above.
class Scalar {
  public:
    struct Fraction {
        Polynomial num, den;
        friend bool operator==(const Fraction& a, const Fraction& b) {
            return a.num == b.num && a.den == b.den;
        }
    };

    Scalar() : v_(Rational()) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(const Rational& r) : v_(r) {}
    /// num/den as polynomials, reduced and demoted as required.
    Scalar(const Polynomial& num, const Polynomial& den);

    static Scalar t() { return Scalar(Polynomial::t(), Polynomial(Rational(1))); }

    bool is_constant() const { return std::holds_alternative<Rational>(v_); }
    bool is_zero() const;
    bool is_one() const;
    /// Precondition: is_constant().
    const Rational& as_rational() const { return std::get<Rational>(v_); }
    const Fraction& as_fraction() const { return std::get<Fraction>(v_); }

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    Scalar pow(unsigned long e) const;

    /// Evaluate at t = r. Throws DenominatorVanishes on a pole.
    Rational specialize(const Rational& r) const;
    /// True if the value genuinely involves t.
    bool depends_on_t() const { return !is_constant(); }

    std::string str() const;

  private:
    std::variant<Rational, Fraction> v_;
};

/*
 * Scalar text grammar (whitespace insignificant):
 *   expr   := term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := '-' factor | power
 *   power  := base ('^' nat)?
 *   base   := nat | 't' | '(' expr ')'
 * Examples: "1/2", "t", "(t^2-1)/(t+1)", "-3", "-1+2*t".
 */
Scalar parse_scalar(const std::string& text);

/// parse_scalar restricted to constants; used for t values and samples.
Rational parse_rational(const std::string& text);

}  // namespace jscoh

#endif
