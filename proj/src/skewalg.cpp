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

#include "pfhilb/skewalg.hpp"

#include <sstream>

#include "pfhilb/text_cursor.hpp"

namespace pfhilb {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a;
    std::uint32_t e = p_ - 2;
    while (e > 0) {
        if (e & 1u) result = result * base % p_;
        base = base * base % p_;
        e >>= 1u;
    }
    return static_cast<value_type>(result);
}

CoeffDomain CoeffDomain::field(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    return CoeffDomain{p};
}

std::string CoeffDomain::name() const { return prime ? "F" + std::to_string(*prime) : "ZZ"; }

SkewMatrix<PrimeField> reduce_mod(const SkewMatrix<IntegerRing>& a, const PrimeField& field) {
    std::vector<PrimeField::value_type> upper;
    upper.reserve(a.upper().size());
    for (const auto& v : a.upper()) upper.push_back(field.from_integer(v));
    return SkewMatrix<PrimeField>(field, a.size(), std::move(upper));
}

std::int64_t stratum_dim(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 0 || k > n) throw std::out_of_range("stratum_dim needs 0 <= k <= n");
    return k * (4 * n - 2 * k - 1);
}

SkewMatrix<IntegerRing> parse_skew_literal(std::string_view text) {
    TextCursor cur(text);
    cur.skip_space();
    const std::string head = cur.identifier();
    if (head.rfind("skew", 0) != 0 || head.size() == 4) cur.fail("expected 'skew<size>'");
    std::size_t size = 0;
    for (std::size_t i = 4; i < head.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(head[i]))) cur.fail("bad matrix size in '" + head + "'");
        size = size * 10 + static_cast<std::size_t>(head[i] - '0');
        if (size > 32) cur.fail("matrix size above 32");
    }
    if (size < 2 || size % 2 != 0) cur.fail("matrix size must be even and >= 2");
    cur.skip_space();
    cur.expect('[');
    std::vector<Integer> entries;
    cur.skip_space();
    if (!cur.accept(']')) {
        for (;;) {
            cur.skip_space();
            const bool negative = cur.accept('-');
            Integer v = cur.integer();
            entries.push_back(negative ? Integer(-v) : v);
            cur.skip_space();
            if (cur.accept(']')) break;
            cur.expect(',');
        }
    }
    cur.skip_space();
    if (!cur.at_end()) cur.fail("trailing input after matrix literal");
    if (entries.size() != SkewMatrix<IntegerRing>::entry_count(size))
        cur.fail("expected " + std::to_string(SkewMatrix<IntegerRing>::entry_count(size)) + " entries, got " +
                 std::to_string(entries.size()));
    return SkewMatrix<IntegerRing>(IntegerRing{}, size, std::move(entries));
}

std::string to_literal(const SkewMatrix<IntegerRing>& a) {
    std::ostringstream os;
    os << "skew" << a.size() << " [";
    std::size_t k = 0;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j, ++k) {
            if (k > 0) os << (j == i + 1 ? ", " : ",");
            os << a.upper()[k];
        }
    }
    os << "]";
    return os.str();
}

}  // namespace pfhilb
