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

#include "pfhilb/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace pfhilb {

namespace {

Rational rational_pow(const Rational& base, std::int64_t e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("negative exponent evaluated at zero");
        return rational_pow(Rational(1) / base, -e);
    }
    Rational result = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

}  // namespace

LaurentPoly2::LaurentPoly2(const Integer& constant) {
    if (constant != 0) terms_.emplace(Exponent{0, 0}, constant);
}

LaurentPoly2 LaurentPoly2::monomial(const Integer& c, std::int64_t a, std::int64_t b) {
    LaurentPoly2 p;
    p.add_term({a, b}, c);
    return p;
}

LaurentPoly2 LaurentPoly2::q_power(std::int64_t k, const Integer& c) { return monomial(c, k, k); }

LaurentPoly2 LaurentPoly2::from_q(std::initializer_list<std::pair<std::int64_t, long long>> terms) {
    LaurentPoly2 p;
    for (const auto& [k, c] : terms) p.add_term({k, k}, c);
    return p;
}

Integer LaurentPoly2::coeff(std::int64_t a, std::int64_t b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly2::is_tate() const noexcept {
    for (const auto& [e, c] : terms_)
        if (e.a != e.b) return false;
    return true;
}

bool LaurentPoly2::is_polynomial() const noexcept {
    for (const auto& [e, c] : terms_)
        if (e.a < 0 || e.b < 0) return false;
    return true;
}

void LaurentPoly2::add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(const LaurentPoly2& rhs) {
    LaurentPoly2 product;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : rhs.terms_) product.add_term({e1.a + e2.a, e1.b + e2.b}, c1 * c2);
    *this = std::move(product);
    return *this;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

LaurentPoly2 operator+(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs += rhs; }
LaurentPoly2 operator-(LaurentPoly2 lhs, const LaurentPoly2& rhs) { return lhs -= rhs; }
LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
    LaurentPoly2 p = lhs;
    return p *= rhs;
}

LaurentPoly2 poly_add(const LaurentPoly2& p, const LaurentPoly2& q) { return p + q; }
LaurentPoly2 poly_mul(const LaurentPoly2& p, const LaurentPoly2& q) { return p * q; }

LaurentPoly2 pow(const LaurentPoly2& p, unsigned e) {
    LaurentPoly2 result(1);
    LaurentPoly2 base = p;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

LaurentPoly2 shift_apply(const LaurentPoly2& p, std::int64_t k) { return (k % 2 == 0) ? p : -p; }

LaurentPoly2 twist_apply(const LaurentPoly2& p, std::int64_t k) {
    LaurentPoly2 out;
    for (const auto& [e, c] : p.terms()) out.add_term({e.a - k, e.b - k}, c);
    return out;
}

LaurentPoly2 dualize(const LaurentPoly2& p) {
    LaurentPoly2 out;
    for (const auto& [e, c] : p.terms()) out.add_term({-e.a, -e.b}, c);
    return out;
}

LaurentPoly2 self_dual_convert(const LaurentPoly2& p, std::int64_t n) {
    LaurentPoly2 out;
    for (const auto& [e, c] : p.terms()) out.add_term({n - e.a, n - e.b}, c);
    return out;
}

Rational eval_at(const LaurentPoly2& p, const Rational& x0, const Rational& y0) {
    Rational sum = 0;
    for (const auto& [e, c] : p.terms()) sum += Rational(c) * rational_pow(x0, e.a) * rational_pow(y0, e.b);
    return sum;
}

Integer euler_value(const LaurentPoly2& p) {
    Integer sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c;
    return sum;
}

Integer eval_q(const LaurentPoly2& p, const Integer& q0) {
    if (!p.is_tate() || !p.is_polynomial())
        throw std::invalid_argument("eval_q needs a Tate polynomial with non-negative exponents");
    Integer sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c * boost::multiprecision::pow(q0, static_cast<unsigned>(e.a));
    return sum;
}

namespace detail {

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    for (const auto& [d1, c1] : a)
        for (const auto& [d2, c2] : b) {
            Integer& slot = out[d1 + d2];
            slot += c1 * c2;
            if (slot == 0) out.erase(d1 + d2);
        }
    return out;
}

UniPoly uni_divide_exact(UniPoly num, const UniPoly& den) {
    if (den.empty()) throw std::domain_error("division by the zero polynomial");
    const auto& [lead_deg, lead_coeff] = *den.rbegin();
    const std::int64_t low_deg = den.begin()->first;
    UniPoly quotient;
    while (!num.empty()) {
        const auto [deg, c] = *num.rbegin();
        // a remainder term below the divisor's span can never be cleared
        if (deg - lead_deg + low_deg < num.begin()->first || c % lead_coeff != 0)
            throw std::logic_error("polynomial division is not exact");
        const Integer factor = c / lead_coeff;
        const std::int64_t shift = deg - lead_deg;
        quotient[shift] = factor;
        for (const auto& [d, dc] : den) {
            Integer& slot = num[d + shift];
            slot -= factor * dc;
            if (slot == 0) num.erase(d + shift);
        }
    }
    return quotient;
}

}  // namespace detail

LaurentPoly2 tate_divide_exact(const LaurentPoly2& num, const LaurentPoly2& den) {
    if (!num.is_tate() || !den.is_tate()) throw std::invalid_argument("tate_divide_exact needs Tate polynomials");
    detail::UniPoly n, d;
    for (const auto& [e, c] : num.terms()) n[e.a] = c;
    for (const auto& [e, c] : den.terms()) d[e.a] = c;
    LaurentPoly2 out;
    for (const auto& [k, c] : detail::uni_divide_exact(std::move(n), d)) out.add_term({k, k}, c);
    return out;
}

namespace {

void append_power(std::ostringstream& os, const char* var, std::int64_t e) {
    os << var;
    if (e == 1) return;
    if (e < 0)
        os << "^(" << e << ")";
    else
        os << '^' << e;
}

}  // namespace

std::string to_string(const LaurentPoly2& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Integer mag = c < 0 ? Integer(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        const bool constant = e.a == 0 && e.b == 0;
        if (constant) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        if (e.a == e.b) {
            if (e.a == 1)
                os << "x*y";
            else
                append_power(os, "(x*y)", e.a);
        } else if (e.b == 0) {
            append_power(os, "x", e.a);
        } else if (e.a == 0) {
            append_power(os, "y", e.b);
        } else {
            append_power(os, "x", e.a);
            os << '*';
            append_power(os, "y", e.b);
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly2& p) { return os << to_string(p); }

// ---------------------------------------------------------------------------
// BettiPoly

BettiPoly::BettiPoly(const std::map<std::int64_t, Integer>& coeffs) {
    for (const auto& [k, c] : coeffs) {
        if (k < 0) throw std::invalid_argument("Betti polynomial with negative degree");
        if (c < 0) throw std::invalid_argument("Betti polynomial with negative coefficient");
        if (c != 0) coeffs_.emplace(k, c);
    }
}

BettiPoly BettiPoly::one_plus_t(std::int64_t k) {
    if (k == 0) return BettiPoly(std::map<std::int64_t, Integer>{{0, 2}});
    return BettiPoly(std::map<std::int64_t, Integer>{{0, 1}, {k, 1}});
}

Integer BettiPoly::coeff(std::int64_t k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? Integer(0) : it->second;
}

std::int64_t BettiPoly::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

Integer BettiPoly::eval(const Integer& t) const {
    Integer sum = 0;
    for (const auto& [k, c] : coeffs_) sum += c * boost::multiprecision::pow(t, static_cast<unsigned>(k));
    return sum;
}

LaurentPoly2 BettiPoly::to_q_poly() const {
    LaurentPoly2 out;
    for (const auto& [k, c] : coeffs_) {
        if (k % 2 != 0) throw std::invalid_argument("odd-degree Betti number has no q-reading");
        out.add_term({k / 2, k / 2}, c);
    }
    return out;
}

BettiPoly operator*(const BettiPoly& lhs, const BettiPoly& rhs) {
    return BettiPoly(detail::uni_mul(lhs.coeffs_, rhs.coeffs_));
}

BettiPoly divide_exact(const BettiPoly& num, const BettiPoly& den) {
    return BettiPoly(detail::uni_divide_exact(num.coeffs(), den.coeffs()));
}

std::ostream& operator<<(std::ostream& os, const BettiPoly& b) { return os << to_string(b); }

std::string to_string(const BettiPoly& b) {
    if (b.coeffs().empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : b.coeffs()) {
        if (!first) os << " + ";
        first = false;
        if (k == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << '*';
        os << 't';
        if (k != 1) os << '^' << k;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// PowerSeries1

PowerSeries1::PowerSeries1(std::int64_t order) : order_(order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries1::PowerSeries1(std::vector<LaurentPoly2> coeffs, std::int64_t order) : PowerSeries1(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

PowerSeries1 PowerSeries1::one(std::int64_t order) { return monomial(LaurentPoly2(1), 0, order); }

PowerSeries1 PowerSeries1::monomial(const LaurentPoly2& c, std::int64_t k, std::int64_t order) {
    PowerSeries1 s(order);
    if (k < 0) throw std::invalid_argument("negative power of z");
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
}

const LaurentPoly2& PowerSeries1::coeff(std::int64_t k) const {
    if (k < 0 || k > order_) throw std::out_of_range("coefficient beyond the truncation order");
    return coeffs_[static_cast<std::size_t>(k)];
}

PowerSeries1 operator+(const PowerSeries1& lhs, const PowerSeries1& rhs) {
    PowerSeries1 out(std::min(lhs.order_, rhs.order_));
    for (std::int64_t k = 0; k <= out.order_; ++k) out.coeffs_[k] = lhs.coeffs_[k] + rhs.coeffs_[k];
    return out;
}

PowerSeries1 operator-(const PowerSeries1& lhs, const PowerSeries1& rhs) {
    PowerSeries1 out(std::min(lhs.order_, rhs.order_));
    for (std::int64_t k = 0; k <= out.order_; ++k) out.coeffs_[k] = lhs.coeffs_[k] - rhs.coeffs_[k];
    return out;
}

PowerSeries1 operator*(const PowerSeries1& lhs, const PowerSeries1& rhs) {
    PowerSeries1 out(std::min(lhs.order_, rhs.order_));
    for (std::int64_t i = 0; i <= out.order_; ++i) {
        if (lhs.coeffs_[i].is_zero()) continue;
        for (std::int64_t j = 0; i + j <= out.order_; ++j) {
            if (rhs.coeffs_[j].is_zero()) continue;
            out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

PowerSeries1 PowerSeries1::inverse() const {
    const LaurentPoly2& c0 = coeffs_[0];
    LaurentPoly2 c0_inv;
    if (c0 == LaurentPoly2(1))
        c0_inv = LaurentPoly2(1);
    else if (c0 == LaurentPoly2(-1))
        c0_inv = LaurentPoly2(-1);
    else
        throw std::domain_error("power series constant term is not +-1");
    PowerSeries1 out(order_);
    out.coeffs_[0] = c0_inv;
    for (std::int64_t k = 1; k <= order_; ++k) {
        LaurentPoly2 acc;
        for (std::int64_t j = 1; j <= k; ++j)
            if (!coeffs_[j].is_zero()) acc += coeffs_[j] * out.coeffs_[k - j];
        out.coeffs_[k] = -(c0_inv * acc);
    }
    return out;
}

PowerSeries1 pow(const PowerSeries1& s, unsigned e) {
    PowerSeries1 result = PowerSeries1::one(s.order());
    PowerSeries1 base = s;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

}  // namespace pfhilb
