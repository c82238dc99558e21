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


#include <doctest.h>

#include "pfhilb/errors.hpp"
#include "pfhilb/laurent.hpp"
#include "test_support.hpp"

using namespace pfhilb;
using pfhilb::testing::random_poly;
using pfhilb::testing::Rng;

namespace {

LaurentPoly2 q(std::int64_t k) { return LaurentPoly2::q_power(k); }

// Evaluation oracle written against the term map directly.
Rational naive_eval(const LaurentPoly2& p, const Rational& x, const Rational& y) {
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational t = Rational(c);
        for (std::int64_t i = 0; i < std::abs(e.a); ++i) t = e.a > 0 ? Rational(t * x) : Rational(t / x);
        for (std::int64_t i = 0; i < std::abs(e.b); ++i) t = e.b > 0 ? Rational(t * y) : Rational(t / y);
        sum += t;
    }
    return sum;
}

}  // namespace

TEST_CASE("zero coefficients are never stored") {
    LaurentPoly2 p = q(7);
    p += -q(7);
    CHECK(p.is_zero());
    CHECK(p.term_count() == 0);
    LaurentPoly2 r;
    r.add_term({1, 2}, 0);
    CHECK(r.is_zero());
}

TEST_CASE("addition and multiplication examples") {
    CHECK(poly_add(LaurentPoly2(1) + q(3), q(3)) == LaurentPoly2(1) + LaurentPoly2(2) * q(3));
    CHECK(poly_mul(LaurentPoly2(1) - q(3), LaurentPoly2(1) - q(5)) ==
          LaurentPoly2(1) - q(3) - q(5) + q(8));
    CHECK(poly_mul(q(4) * q(2), LaurentPoly2(1) + q(1) + q(2)) == q(6) + q(7) + q(8));
    Rng rng(1);
    for (int i = 0; i < 50; ++i) {
        const auto p = random_poly(rng);
        CHECK(poly_mul(p, LaurentPoly2(1)) == p);
    }
}

TEST_CASE("shift, twist, dualize, self_dual_convert examples") {
    CHECK(shift_apply(q(3), 3) == -q(3));
    CHECK(twist_apply(LaurentPoly2(1), -3) == q(3));
    CHECK(dualize(LaurentPoly2(1) - q(3)) == LaurentPoly2(1) - q(-3));
    CHECK(self_dual_convert(q(3) * (q(5) - q(2) - LaurentPoly2(1)), 15) ==
          q(7) * (LaurentPoly2(1) - q(3) - q(5)));
    CHECK(self_dual_convert(q(4), 8) == q(4));
    CHECK(self_dual_convert(-(LaurentPoly2(1) + q(2) + q(4)), 9) == -(q(5) + q(7) + q(9)));
    // E(F) for n = 3 and its compactly supported counterpart
    const LaurentPoly2 e_f = (LaurentPoly2(1) - q(3)) * (LaurentPoly2(1) - q(5));
    const LaurentPoly2 e_c = twist_apply(dualize(e_f), -14);
    CHECK(e_c == q(14) - q(11) - q(9) + q(6));
    CHECK(eval_q(e_c, 2) == 13888);
    // a genuinely bivariate substitution
    CHECK(dualize(LaurentPoly2::monomial(3, 2, -1)) == LaurentPoly2::monomial(3, -2, 1));
}

TEST_CASE("ring laws on random triples") {
    Rng rng(2);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == LaurentPoly2());
        CHECK(to_string(a * b) == to_string(b * a));
    }
}

TEST_CASE("duality laws on 1000 random polynomials") {
    Rng rng(3);
    std::uniform_int_distribution<int> n_dist(-30, 30);
    for (int i = 0; i < 1000; ++i) {
        const auto p = random_poly(rng);
        const int n = n_dist(rng);
        CHECK(dualize(dualize(p)) == p);
        CHECK(self_dual_convert(self_dual_convert(p, n), n) == p);
        CHECK(shift_apply(p, n) == shift_apply(p, ((n % 2) + 2) % 2));
        CHECK(shift_apply(shift_apply(p, 9), 9) == p);
        CHECK(twist_apply(twist_apply(p, n), 5) == twist_apply(p, n + 5));
        CHECK(twist_apply(twist_apply(p, 5), -5) == p);
    }
}

TEST_CASE("evaluation") {
    const LaurentPoly2 total = q(6) * LaurentPoly2::from_q({{6, 1}, {5, 1}, {4, 3}, {3, 3}, {2, 3}, {1, 1}, {0, 1}});
    CHECK(eval_at(total, 1, 1) == 13);
    CHECK(eval_at(LaurentPoly2(), Rational(3, 7), Rational(-2)) == 0);
    const LaurentPoly2 ec_x = LaurentPoly2::from_q({{9, 1}, {7, 1}, {5, 1}, {4, -1}, {2, -1}});
    CHECK(eval_at(ec_x, 2, 1) == 652);
    CHECK(eval_q(ec_x, 2) == 652);
    CHECK_THROWS_AS(eval_at(q(-1), 0, 1), std::domain_error);
    CHECK(eval_at(q(2), 0, 5) == 0);

    Rng rng(4);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng);
        Rational x(num(rng), den(rng)), y(num(rng), den(rng));
        if (x == 0) x = 1;
        if (y == 0) y = -1;
        CHECK(eval_at(a * b, x, y) == eval_at(a, x, y) * eval_at(b, x, y));
        CHECK(eval_at(a, x, y) == naive_eval(a, x, y));
    }
}

TEST_CASE("is_tate and is_polynomial") {
    CHECK(q(3).is_tate());
    CHECK_FALSE(LaurentPoly2::x().is_tate());
    CHECK(LaurentPoly2().is_tate());
    CHECK(q(2).is_polynomial());
    CHECK_FALSE(q(-2).is_polynomial());
}

TEST_CASE("exact division of Tate polynomials") {
    const LaurentPoly2 den = LaurentPoly2(1) - q(2);
    Rng rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto p = pfhilb::testing::random_tate_poly(rng);
        CHECK(tate_divide_exact(p * den, den) == p);
    }
    CHECK_THROWS_AS(tate_divide_exact(q(3) + LaurentPoly2(1), LaurentPoly2(1) - q(1)), std::logic_error);
    CHECK_THROWS_AS(tate_divide_exact(LaurentPoly2::x(), q(1)), std::invalid_argument);
}

TEST_CASE("canonical text and parsing") {
    CHECK(to_string(q(7) - q(10) - q(12)) == "(x*y)^7 - (x*y)^10 - (x*y)^12");
    CHECK(to_string(LaurentPoly2()) == "0");
    CHECK(to_string(q(1)) == "x*y");
    CHECK(to_string(LaurentPoly2(3) * q(4)) == "3*(x*y)^4");
    CHECK(parse_poly("(x*y)^7 - (x*y)^10 - (x*y)^12") == q(7) - q(10) - q(12));
    CHECK(parse_poly("q^3*(q^5 - q^2 - 1)") == q(3) * (q(5) - q(2) - LaurentPoly2(1)));
    CHECK(parse_poly("x^2*y^(-1)") == LaurentPoly2::monomial(1, 2, -1));
    CHECK(parse_poly("-(1 + x*y)^2") == -pow(LaurentPoly2(1) + q(1), 2));

    Rng rng(6);
    for (int i = 0; i < 500; ++i) {
        const auto p = random_poly(rng);
        CHECK(parse_poly(to_string(p)) == p);
    }
}

TEST_CASE("parse errors carry positions") {
    try {
        parse_poly("x +\n  * y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    CHECK_THROWS_AS(parse_poly("x^"), ParseError);
    CHECK_THROWS_AS(parse_poly("(1 + x)^(-1)"), ParseError);
    CHECK_THROWS_AS(parse_poly("z"), ParseError);
    CHECK_THROWS_AS(parse_poly(std::string(70 * 1024, '1')), ParseError);
}

TEST_CASE("Betti polynomials") {
    const BettiPoly b = BettiPoly::one_plus_t(5) * BettiPoly::one_plus_t(9);
    CHECK(b.coeff(14) == 1);
    CHECK(b.eval(1) == 4);
    CHECK(b.euler_characteristic() == 0);
    CHECK(b.degree() == 14);
    CHECK(divide_exact(b, BettiPoly::one_plus_t(5)) == BettiPoly::one_plus_t(9));
    CHECK_THROWS_AS(BettiPoly(std::map<std::int64_t, Integer>{{0, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(BettiPoly(std::map<std::int64_t, Integer>{{-1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(b.to_q_poly(), std::invalid_argument);
    CHECK(BettiPoly(std::map<std::int64_t, Integer>{{0, 1}, {2, 3}}).to_q_poly() == LaurentPoly2(1) + LaurentPoly2(3) * q(1));
}

TEST_CASE("power series") {
    const PowerSeries1 one = PowerSeries1::one(8);
    const PowerSeries1 s = one - PowerSeries1::monomial(q(2), 1, 8);
    const PowerSeries1 inv = s.inverse();
    CHECK(s * inv == one);
    for (std::int64_t k = 0; k <= 8; ++k) CHECK(inv.coeff(k) == q(2 * k));
    CHECK_THROWS_AS(inv.coeff(9), std::out_of_range);
    // mixed orders truncate to the smaller one
    CHECK((PowerSeries1::one(3) + PowerSeries1::one(5)).order() == 3);
    CHECK_THROWS_AS((PowerSeries1::monomial(LaurentPoly2(2), 0, 3)).inverse(), std::domain_error);
    CHECK(pow(s, 2).coeff(2) == q(4));
}
