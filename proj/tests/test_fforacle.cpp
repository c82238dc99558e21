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
#include "pfhilb/fforacle.hpp"
#include "pfhilb/motivic.hpp"
#include "pfhilb/skewalg.hpp"

using namespace pfhilb;

namespace {

LaurentPoly2 q(std::int64_t k) { return LaurentPoly2::q_power(k); }

// 4x4 brute force written out by hand: Pf = af - be + cd, and the rank is 0,
// 2 or 4 according to whether the matrix vanishes or the Pfaffian does.
struct Brute4 {
    std::map<std::size_t, Integer> by_rank;
    std::vector<Integer> by_pf;
};

Brute4 brute_force_4x4(std::uint32_t p) {
    Brute4 out;
    out.by_pf.assign(p, 0);
    for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 0; b < p; ++b)
            for (std::uint32_t c = 0; c < p; ++c)
                for (std::uint32_t d = 0; d < p; ++d)
                    for (std::uint32_t e = 0; e < p; ++e)
                        for (std::uint32_t f = 0; f < p; ++f) {
                            const long long pf = (static_cast<long long>(a) * f - static_cast<long long>(b) * e +
                                                  static_cast<long long>(c) * d) %
                                                 p;
                            const auto v = static_cast<std::size_t>((pf + p) % p);
                            out.by_pf[v] += 1;
                            const bool zero = (a | b | c | d | e | f) == 0;
                            out.by_rank[zero ? 0 : (v == 0 ? 2 : 4)] += 1;
                        }
    return out;
}

// q-Pascal: [n, k] = [n-1, k-1] + q^k [n-1, k].
LaurentPoly2 q_pascal(std::int64_t n, std::int64_t k) {
    if (k == 0 || k == n) return LaurentPoly2(1);
    return q_pascal(n - 1, k - 1) + q(k) * q_pascal(n - 1, k);
}

}  // namespace

TEST_CASE("4x4 scans match the hand-written brute force") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Brute4 brute = brute_force_4x4(p);
        const ScanTally t = scan_skew_space(2, p);
        CHECK(t.by_pfaffian == brute.by_pf);
        std::map<std::size_t, Integer> nonzero;
        for (const auto& [r, c] : t.by_rank)
            if (c != 0) nonzero[r] = c;
        CHECK(nonzero == brute.by_rank);
        CHECK(t.visited == skew_space_size(2, p));
    }
}

TEST_CASE("known counts over F_2 and F_3") {
    const ScanTally t2 = scan_skew_space(3, 2);
    CHECK(t2.visited == 32768);
    CHECK(count_from_tally(t2, CountDirective::rank_at_most(3, 2)) == 652);
    CHECK(count_from_tally(t2, CountDirective::pfaffian_value(3, 1)) == 13888);
    CHECK(count_pf_fibre(2, 2, 1) == 28);
    CHECK(count_pf_fibre(2, 3, 1) == 234);
    Integer sum = 0;
    for (const auto& [r, c] : count_by_rank(3, 2)) sum += c;
    CHECK(sum == 32768);
    CHECK(t2.det_spot_checks > 0);
}

TEST_CASE("fibre identity #{Pf != 0} = (p - 1) #{Pf = 1}") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const ScanTally t = scan_skew_space(2, p);
        CHECK(count_from_tally(t, CountDirective::pfaffian_nonzero(2)) ==
              Integer(p - 1) * count_from_tally(t, CountDirective::pfaffian_value(2, 1)));
        for (std::uint32_t c = 1; c < p; ++c) CHECK(t.by_pfaffian[c] == t.by_pfaffian[1]);
    }
}

TEST_CASE("counts match E_c at q = p") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const ScanTally t = scan_skew_space(2, p);
        CHECK(count_from_tally(t, CountDirective::pfaffian_value(2, 1)) == eval_q(ec(SpaceExpr::milnor_fibre(2)), p));
        CHECK(count_from_tally(t, CountDirective::pfaffian_zero(2)) ==
              eval_q(ec(SpaceExpr::pfaffian_hypersurface(2)), p));
        CHECK(count_from_tally(t, CountDirective::pfaffian_nonzero(2)) == eval_q(ec(SpaceExpr::homspace(2)), p));
        CHECK(count_from_tally(t, CountDirective::rank_exactly(2, 0)) == 1);
    }
    const ScanTally t = scan_skew_space(3, 2);
    CHECK(count_from_tally(t, CountDirective::rank_at_most(3, 2)) ==
          eval_q(ec(SpaceExpr::cone(SpaceExpr::grass(2, 6))), 2));
    CHECK(count_from_tally(t, CountDirective::rank_at_most(3, 4)) ==
          eval_q(ec(SpaceExpr::pfaffian_hypersurface(3)), 2));
}

TEST_CASE("results do not depend on the worker count") {
    const ScanTally one = scan_skew_space(3, 2, {kDefaultEnumerationCap, 1});
    for (unsigned w : {2u, 3u, 8u, 64u}) CHECK(scan_skew_space(3, 2, {kDefaultEnumerationCap, w}) == one);
    // more workers than matrices
    CHECK(scan_skew_space(1, 2, {kDefaultEnumerationCap, 8}).visited == 2);
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(scan_skew_space(3, 2, {1000, 1}), EnumerationCapError);
    try {
        scan_skew_space(3, 3, {10, 1});
    } catch (const EnumerationCapError& e) {
        CHECK(e.estimate() == "14348907");
    }
    CHECK_NOTHROW(scan_skew_space(2, 2, {64, 1}));
    CHECK_THROWS_AS(scan_skew_space(2, 4), std::invalid_argument);
}

TEST_CASE("Gaussian binomials match the q-Pascal recursion") {
    for (std::int64_t n = 0; n <= 9; ++n)
        for (std::int64_t k = 0; k <= n; ++k) CHECK(gaussian_binomial(n, k) == q_pascal(n, k));
    CHECK(eval_q(gaussian_binomial(6, 2), 2) == 651);
    CHECK(eval_q(LaurentPoly2(1) + (q(1) - LaurentPoly2(1)) * gaussian_binomial(6, 2), 2) == 652);
    CHECK_THROWS_AS(gaussian_binomial(2, 3), std::out_of_range);
}

TEST_CASE("katz_check reports") {
    ScanCache cache;
    const CountReport r = katz_check("cone", ec(SpaceExpr::cone(SpaceExpr::grass(2, 6))), 2,
                                     CountDirective::rank_at_most(3, 2), cache);
    CHECK(r.match);
    CHECK(r.observed == 652);
    CHECK(r.predicted_value == 652);
    CHECK(r.enumeration_size == 32768);
    const CountReport bad = katz_check("wrong", q(15), 2, CountDirective::pfaffian_value(3, 1), cache);
    CHECK_FALSE(bad.match);
    CHECK(CountDirective::rank_at_most(3, 2).describe() == "Sk(6) rank <= 2");
}
