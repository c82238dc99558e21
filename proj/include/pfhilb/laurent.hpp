/*
 * Copyright 2026 The pfhilb Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file laurent.hpp
 *
 * Exact sparse bivariate Laurent polynomials in x, y with arbitrary-precision
 * integer coefficients, plus the univariate carriers built on top of them
 * (Betti polynomials in t and truncated power series in z).
 *
 * Every E-polynomial handled by the library lives in LaurentPoly2. Most of
 * them only involve the monomial q = xy; such polynomials are called Tate.
 */

#ifndef PFHILB_LAURENT_HPP
#define PFHILB_LAURENT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pfhilb {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Exponent {
    std::int64_t a = 0;  // power of x
    std::int64_t b = 0;  // power of y

    auto operator<=>(const Exponent&) const = default;
};

/// Bivariate Laurent polynomial; zero coefficients are never stored and
/// terms iterate in (a, then b) ascending order.
class LaurentPoly2 {
   public:
    using TermMap = std::map<Exponent, Integer>;

    LaurentPoly2() = default;
    LaurentPoly2(const Integer& constant);
    LaurentPoly2(long long constant) : LaurentPoly2(Integer(constant)) {}

    static LaurentPoly2 monomial(const Integer& c, std::int64_t a, std::int64_t b);
    /// c * (xy)^k
    static LaurentPoly2 q_power(std::int64_t k, const Integer& c = 1);
    /// Sum of c_k (xy)^k from (k, c_k) pairs.
    static LaurentPoly2 from_q(std::initializer_list<std::pair<std::int64_t, long long>> terms);
    static LaurentPoly2 x() { return monomial(1, 1, 0); }
    static LaurentPoly2 y() { return monomial(1, 0, 1); }
    static LaurentPoly2 q() { return q_power(1); }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Integer coeff(std::int64_t a, std::int64_t b) const;
    /// Coefficient of (xy)^k.
    Integer q_coeff(std::int64_t k) const { return coeff(k, k); }

    /// True iff every stored exponent pair has a == b.
    bool is_tate() const noexcept;
    /// True iff no exponent is negative.
    bool is_polynomial() const noexcept;

    void add_term(const Exponent& e, const Integer& c);

    LaurentPoly2& operator+=(const LaurentPoly2& rhs);
    LaurentPoly2& operator-=(const LaurentPoly2& rhs);
    LaurentPoly2& operator*=(const LaurentPoly2& rhs);
    LaurentPoly2 operator-() const;

    friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

   private:
    TermMap terms_;
};

LaurentPoly2 operator+(LaurentPoly2 lhs, const LaurentPoly2& rhs);
LaurentPoly2 operator-(LaurentPoly2 lhs, const LaurentPoly2& rhs);
LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs);

LaurentPoly2 poly_add(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 poly_mul(const LaurentPoly2& p, const LaurentPoly2& q);
LaurentPoly2 pow(const LaurentPoly2& p, unsigned e);

/// E(V, Phi[k]) = (-1)^{-k} E(V, Phi).
LaurentPoly2 shift_apply(const LaurentPoly2& p, std::int64_t k);
/// E(V, Phi(k)) = (xy)^{-k} E(V, Phi).
LaurentPoly2 twist_apply(const LaurentPoly2& p, std::int64_t k);
/// x^a y^b -> x^-a y^-b.
LaurentPoly2 dualize(const LaurentPoly2& p);
/// (xy)^n p(1/x, 1/y); an involution for each fixed n.
LaurentPoly2 self_dual_convert(const LaurentPoly2& p, std::int64_t n);

/// Exact evaluation. Throws std::domain_error when a zero argument meets a
/// negative exponent.
Rational eval_at(const LaurentPoly2& p, const Rational& x0, const Rational& y0);
/// Value at x = y = 1, i.e. the Euler characteristic specialization.
Integer euler_value(const LaurentPoly2& p);
/// Value at xy = q0 for a Tate polynomial with non-negative exponents.
Integer eval_q(const LaurentPoly2& p, const Integer& q0);

/// Exact division of Tate polynomials (as polynomials in q = xy). Throws
/// std::invalid_argument for non-Tate input and std::logic_error when the
/// remainder is nonzero.
LaurentPoly2 tate_divide_exact(const LaurentPoly2& num, const LaurentPoly2& den);

/// Canonical text, e.g. "(x*y)^7 - (x*y)^10 - (x*y)^12".
std::string to_string(const LaurentPoly2& p);
std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p);

/// Parses the textual polynomial grammar (see poly_text.cpp). Throws
/// ParseError on malformed input.
LaurentPoly2 parse_poly(std::string_view text);

namespace detail {
/// Univariate Laurent polynomial keyed by degree.
using UniPoly = std::map<std::int64_t, Integer>;
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
/// Exact long division; throws std::logic_error on a nonzero remainder.
UniPoly uni_divide_exact(UniPoly num, const UniPoly& den);
}  // namespace detail

/// Betti polynomial sum_k b_k t^k with b_k >= 0.
class BettiPoly {
   public:
    BettiPoly() = default;
    /// Throws std::invalid_argument on a negative coefficient or degree.
    explicit BettiPoly(const std::map<std::int64_t, Integer>& coeffs);
    static BettiPoly one() { return BettiPoly(std::map<std::int64_t, Integer>{{0, 1}}); }
    /// 1 + t^k
    static BettiPoly one_plus_t(std::int64_t k);

    const std::map<std::int64_t, Integer>& coeffs() const noexcept { return coeffs_; }
    Integer coeff(std::int64_t k) const;
    std::int64_t degree() const;
    Integer eval(const Integer& t) const;
    /// Alternating sum, i.e. B(-1).
    Integer euler_characteristic() const { return eval(-1); }

    /// Reads an even-degree Betti polynomial as a polynomial in q with t^2 = q.
    /// Throws std::invalid_argument if an odd degree is present.
    LaurentPoly2 to_q_poly() const;

    friend bool operator==(const BettiPoly&, const BettiPoly&) = default;
    friend BettiPoly operator*(const BettiPoly& lhs, const BettiPoly& rhs);

   private:
    std::map<std::int64_t, Integer> coeffs_;
};

/// Exact quotient, validated to have non-negative coefficients.
BettiPoly divide_exact(const BettiPoly& num, const BettiPoly& den);
std::string to_string(const BettiPoly& b);
std::ostream& operator<<(std::ostream& os, const BettiPoly& b);

/// Power series in z with LaurentPoly2 coefficients, known for degrees
/// 0..order inclusive.
class PowerSeries1 {
   public:
    explicit PowerSeries1(std::int64_t order);
    PowerSeries1(std::vector<LaurentPoly2> coeffs, std::int64_t order);

    static PowerSeries1 one(std::int64_t order);
    /// c * z^k truncated at order.
    static PowerSeries1 monomial(const LaurentPoly2& c, std::int64_t k, std::int64_t order);

    std::int64_t order() const noexcept { return order_; }
    /// Coefficient of z^k; throws std::out_of_range beyond the order.
    const LaurentPoly2& coeff(std::int64_t k) const;

    /// Inverse of a series whose constant term is +-1; otherwise throws
    /// std::domain_error.
    PowerSeries1 inverse() const;

    friend PowerSeries1 operator+(const PowerSeries1& lhs, const PowerSeries1& rhs);
    friend PowerSeries1 operator-(const PowerSeries1& lhs, const PowerSeries1& rhs);
    friend PowerSeries1 operator*(const PowerSeries1& lhs, const PowerSeries1& rhs);
    friend bool operator==(const PowerSeries1&, const PowerSeries1&) = default;

   private:
    std::vector<LaurentPoly2> coeffs_;  // size order_ + 1
    std::int64_t order_;
};

PowerSeries1 pow(const PowerSeries1& s, unsigned e);

}  // namespace pfhilb

#endif  // PFHILB_LAURENT_HPP
