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
 * @file skewalg.hpp
 *
 * Skew-symmetric matrices over a coefficient domain (a prime field F_p or the
 * integers): Pfaffian by first-row expansion, rank over a field, determinants,
 * the congruence action g.A = g A g^T and the rank-stratum dimension formula.
 *
 * The Pfaffian sign convention is
 *
 *   Pf(A) = sum_{j >= 2} (-1)^j a_{1j} Pf(A without rows/cols 1, j)
 *
 * with 1-based j, so the 4x4 matrix with upper entries (a,b,c,d,e,f) has
 * Pf = af - be + cd.
 */

#ifndef PFHILB_SKEWALG_HPP
#define PFHILB_SKEWALG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfhilb/laurent.hpp"

namespace pfhilb {

bool is_prime(std::uint64_t n) noexcept;

/// Arbitrary-precision integers.
class IntegerRing {
   public:
    using value_type = Integer;
    static constexpr bool is_field = false;

    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long long v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    /// Exact quotient; used by fraction-free elimination.
    value_type exact_div(const value_type& a, const value_type& b) const { return a / b; }
    bool is_zero(const value_type& a) const { return a == 0; }
    Integer to_integer(const value_type& a) const { return a; }
    std::string name() const { return "ZZ"; }

    friend bool operator==(const IntegerRing&, const IntegerRing&) = default;
};

/// The prime field F_p, elements stored as canonical residues in [0, p).
class PrimeField {
   public:
    using value_type = std::uint32_t;
    static constexpr bool is_field = true;

    /// Throws std::invalid_argument unless p is prime.
    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1 % p_; }
    value_type from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        return static_cast<value_type>(r < 0 ? r + p_ : r);
    }
    value_type from_integer(const Integer& v) const {
        Integer r = v % p_;
        if (r < 0) r += p_;
        return r.convert_to<value_type>();
    }
    value_type add(value_type a, value_type b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<value_type>(s >= p_ ? s - p_ : s);
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : static_cast<value_type>(std::uint64_t(a) + p_ - b); }
    value_type mul(value_type a, value_type b) const { return static_cast<value_type>(std::uint64_t(a) * b % p_); }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    /// Multiplicative inverse; throws std::domain_error for zero.
    value_type inv(value_type a) const;
    bool is_zero(value_type a) const { return a == 0; }
    Integer to_integer(value_type a) const { return a; }
    std::string name() const { return "F" + std::to_string(p_); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

   private:
    std::uint32_t p_;
};

/// Runtime description of a coefficient domain: the integers, or F_p.
struct CoeffDomain {
    std::optional<std::uint32_t> prime;

    static CoeffDomain integers() { return {}; }
    /// Throws std::invalid_argument unless p is prime.
    static CoeffDomain field(std::uint32_t p);
    bool is_field() const noexcept { return prime.has_value(); }
    std::string name() const;

    friend bool operator==(const CoeffDomain&, const CoeffDomain&) = default;
};

/// Dense square matrix over a domain, row-major.
template <class Domain>
class SquareMatrix {
   public:
    using value_type = typename Domain::value_type;

    SquareMatrix(Domain dom, std::size_t size) : dom_(std::move(dom)), size_(size), data_(size * size, dom_.zero()) {}

    static SquareMatrix identity(Domain dom, std::size_t size) {
        SquareMatrix m(dom, size);
        for (std::size_t i = 0; i < size; ++i) m(i, i) = m.dom_.one();
        return m;
    }

    const Domain& domain() const noexcept { return dom_; }
    std::size_t size() const noexcept { return size_; }
    value_type& operator()(std::size_t i, std::size_t j) { return data_[i * size_ + j]; }
    const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * size_ + j]; }

    SquareMatrix transpose() const {
        SquareMatrix t(dom_, size_);
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        if (a.size_ != b.size_) throw std::invalid_argument("matrix size mismatch");
        SquareMatrix c(a.dom_, a.size_);
        for (std::size_t i = 0; i < a.size_; ++i)
            for (std::size_t k = 0; k < a.size_; ++k) {
                if (a.dom_.is_zero(a(i, k))) continue;
                for (std::size_t j = 0; j < a.size_; ++j) c(i, j) = a.dom_.add(c(i, j), a.dom_.mul(a(i, k), b(k, j)));
            }
        return c;
    }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

   private:
    Domain dom_;
    std::size_t size_;
    std::vector<value_type> data_;
};

/// Skew-symmetric matrix of even size 2n, storing only the strictly upper
/// triangle in row-major order: a_{01}, ..., a_{0,2n-1}, a_{12}, ...
template <class Domain>
class SkewMatrix {
   public:
    using value_type = typename Domain::value_type;

    /// Zero matrix; throws std::invalid_argument unless size is even and >= 2.
    SkewMatrix(Domain dom, std::size_t size) : dom_(std::move(dom)), size_(size) {
        if (size < 2 || size % 2 != 0) throw std::invalid_argument("skew matrix size must be even and >= 2");
        if (size > 32) throw std::invalid_argument("skew matrix size above 32 is not supported");
        upper_.assign(entry_count(size), dom_.zero());
    }

    /// Throws std::invalid_argument if the entry count is not n(2n-1).
    SkewMatrix(Domain dom, std::size_t size, std::vector<value_type> upper) : SkewMatrix(std::move(dom), size) {
        if (upper.size() != upper_.size()) throw std::invalid_argument("wrong number of upper-triangle entries");
        upper_ = std::move(upper);
    }

    /// n(2n-1) for a 2n x 2n matrix, i.e. 1 + 2 + ... + (2n-1).
    static constexpr std::size_t entry_count(std::size_t size) noexcept { return size * (size - 1) / 2; }

    const Domain& domain() const noexcept { return dom_; }
    std::size_t size() const noexcept { return size_; }
    std::size_t half_size() const noexcept { return size_ / 2; }
    const std::vector<value_type>& upper() const noexcept { return upper_; }

    /// Position of a_{ij}, i < j, in the upper-triangle array.
    std::size_t upper_index(std::size_t i, std::size_t j) const noexcept {
        return i * (2 * size_ - i - 1) / 2 + (j - i - 1);
    }

    value_type at(std::size_t i, std::size_t j) const {
        if (i == j) return dom_.zero();
        if (i < j) return upper_[upper_index(i, j)];
        return dom_.neg(upper_[upper_index(j, i)]);
    }

    /// Sets a_{ij} for i < j (and implicitly a_{ji} = -a_{ij}).
    void set(std::size_t i, std::size_t j, const value_type& v) {
        if (i >= j || j >= size_) throw std::out_of_range("set() needs 0 <= i < j < size");
        upper_[upper_index(i, j)] = v;
    }
    void set_upper(std::size_t k, const value_type& v) { upper_[k] = v; }

    SquareMatrix<Domain> to_square() const {
        SquareMatrix<Domain> m(dom_, size_);
        for (std::size_t i = 0; i < size_; ++i)
            for (std::size_t j = 0; j < size_; ++j) m(i, j) = at(i, j);
        return m;
    }

    /// Reads a skew-symmetric square matrix; throws std::invalid_argument if
    /// it is not skew (A^T = -A with zero diagonal).
    static SkewMatrix from_square(const SquareMatrix<Domain>& m) {
        SkewMatrix s(m.domain(), m.size());
        const Domain& d = m.domain();
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!d.is_zero(m(i, i))) throw std::invalid_argument("nonzero diagonal in a skew matrix");
            for (std::size_t j = i + 1; j < m.size(); ++j) {
                if (!d.is_zero(d.add(m(i, j), m(j, i)))) throw std::invalid_argument("matrix is not skew-symmetric");
                s.set(i, j, m(i, j));
            }
        }
        return s;
    }

    /// The standard matrix [[0, I_k, 0], [-I_k, 0, 0], [0, 0, 0]] of rank 2k.
    static SkewMatrix standard(Domain dom, std::size_t n, std::size_t k) {
        if (k > n) throw std::invalid_argument("standard matrix needs k <= n");
        SkewMatrix s(dom, 2 * n);
        for (std::size_t i = 0; i < k; ++i) s.set(i, k + i, s.dom_.one());
        return s;
    }

    friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

   private:
    Domain dom_;
    std::size_t size_;
    std::vector<value_type> upper_;
};

namespace detail {

template <class Domain>
typename Domain::value_type pfaffian_expand(const SkewMatrix<Domain>& a, std::uint32_t remaining) {
    const Domain& d = a.domain();
    if (remaining == 0) return d.one();
    const unsigned first = static_cast<unsigned>(__builtin_ctz(remaining));
    std::uint32_t rest = remaining & (remaining - 1);
    typename Domain::value_type sum = d.zero();
    bool positive = true;  // position 1 in the remaining set carries sign +
    for (std::uint32_t scan = rest; scan != 0; scan &= scan - 1) {
        const unsigned j = static_cast<unsigned>(__builtin_ctz(scan));
        const auto& entry = a.upper()[a.upper_index(first, j)];
        if (!d.is_zero(entry)) {
            auto term = d.mul(entry, pfaffian_expand(a, rest & ~(std::uint32_t(1) << j)));
            sum = positive ? d.add(sum, term) : d.sub(sum, term);
        }
        positive = !positive;
    }
    return sum;
}

}  // namespace detail

/// Pfaffian by recursive first-row expansion; (2n-1)!! terms in the worst case.
template <class Domain>
typename Domain::value_type pfaffian(const SkewMatrix<Domain>& a) {
    const std::uint32_t all = a.size() == 32 ? ~std::uint32_t(0) : ((std::uint32_t(1) << a.size()) - 1);
    return detail::pfaffian_expand(a, all);
}

/// Determinant: Gaussian elimination over a field, Bareiss fraction-free
/// elimination over the integers.
template <class Domain>
typename Domain::value_type determinant(SquareMatrix<Domain> m) {
    const Domain& d = m.domain();
    const std::size_t n = m.size();
    bool negate = false;
    if constexpr (Domain::is_field) {
        auto det = d.one();
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t pivot = col;
            while (pivot < n && d.is_zero(m(pivot, col))) ++pivot;
            if (pivot == n) return d.zero();
            if (pivot != col) {
                for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
                negate = !negate;
            }
            det = d.mul(det, m(col, col));
            const auto inv = d.inv(m(col, col));
            for (std::size_t r = col + 1; r < n; ++r) {
                if (d.is_zero(m(r, col))) continue;
                const auto factor = d.mul(m(r, col), inv);
                for (std::size_t j = col; j < n; ++j) m(r, j) = d.sub(m(r, j), d.mul(factor, m(col, j)));
            }
        }
        return negate ? d.neg(det) : det;
    } else {
        if (n == 0) return d.one();
        auto prev = d.one();
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (d.is_zero(m(k, k))) {
                std::size_t pivot = k + 1;
                while (pivot < n && d.is_zero(m(pivot, k))) ++pivot;
                if (pivot == n) return d.zero();
                for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(k, j));
                negate = !negate;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j)
                    m(i, j) = d.exact_div(d.sub(d.mul(m(i, j), m(k, k)), d.mul(m(i, k), m(k, j))), prev);
                m(i, k) = d.zero();
            }
            prev = m(k, k);
        }
        const auto det = m(n - 1, n - 1);
        return negate ? d.neg(det) : det;
    }
}

/// Rank over a field by Gaussian elimination.
template <class Domain>
    requires(Domain::is_field)
std::size_t rank(SquareMatrix<Domain> m) {
    const Domain& d = m.domain();
    const std::size_t n = m.size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < n; ++col) {
        std::size_t pivot = r;
        while (pivot < n && d.is_zero(m(pivot, col))) ++pivot;
        if (pivot == n) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(r, j));
        const auto inv = d.inv(m(r, col));
        for (std::size_t i = r + 1; i < n; ++i) {
            if (d.is_zero(m(i, col))) continue;
            const auto factor = d.mul(m(i, col), inv);
            for (std::size_t j = col; j < n; ++j) m(i, j) = d.sub(m(i, j), d.mul(factor, m(r, j)));
        }
        ++r;
    }
    return r;
}

/// Rank of a skew matrix over a field; always even.
template <class Domain>
    requires(Domain::is_field)
std::size_t skew_rank(const SkewMatrix<Domain>& a) {
    return rank(a.to_square());
}

/// g.A = g A g^T; throws std::invalid_argument on a size mismatch.
template <class Domain>
SkewMatrix<Domain> congruence(const SquareMatrix<Domain>& g, const SkewMatrix<Domain>& a) {
    if (g.size() != a.size()) throw std::invalid_argument("congruence: size mismatch");
    return SkewMatrix<Domain>::from_square(g * a.to_square() * g.transpose());
}

/// True iff Pf(g A g^T) == det(g) Pf(A). Throws std::invalid_argument on a
/// size mismatch.
template <class Domain>
bool check_equivariance(const SkewMatrix<Domain>& a, const SquareMatrix<Domain>& g) {
    const Domain& d = a.domain();
    const auto lhs = pfaffian(congruence(g, a));
    const auto rhs = d.mul(determinant(g), pfaffian(a));
    return d.is_zero(d.sub(lhs, rhs));
}

/// Reduces an integer matrix modulo p.
SkewMatrix<PrimeField> reduce_mod(const SkewMatrix<IntegerRing>& a, const PrimeField& field);

/// Dimension k(4n - 2k - 1) of the closure of the rank-2k stratum in Sk(2n).
/// Throws std::out_of_range unless 0 <= k <= n.
std::int64_t stratum_dim(std::int64_t n, std::int64_t k);

/// Parses the literal format "skew6 [0,1,0,1,0, 1,0,0,0, 1,0,0, 0,1, 0]"
/// (row-major upper triangle). Throws ParseError.
SkewMatrix<IntegerRing> parse_skew_literal(std::string_view text);
std::string to_literal(const SkewMatrix<IntegerRing>& a);

}  // namespace pfhilb

#endif  // PFHILB_SKEWALG_HPP
