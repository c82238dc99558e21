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
#include "pfhilb/mhm.hpp"

using namespace pfhilb;

namespace {

LaurentPoly2 q(std::int64_t k) { return LaurentPoly2::q_power(k); }
const LaurentPoly2 kOne(1);

}  // namespace

TEST_CASE("stalk tables") {
    const StalkTable f = milnor_fibre_cohomology_n3();
    CHECK(f.degrees() == std::vector<std::int64_t>{0, 5, 9, 14});
    CHECK(f.e_poly() == catalog_e_F(3));
    CHECK(f.total_rank() == 4);

    const StalkTable phi = vanishing_cycle_stalks();
    CHECK(phi.degrees() == std::vector<std::int64_t>{-9, -5, 0});
    CHECK(phi.e_poly() == q(3) * (q(5) - q(2) - kOne));
    CHECK(phi.euler() == -1);

    const StalkTable ic = ic_stalks();
    CHECK(ic.degrees() == std::vector<std::int64_t>{-9, -5, -1});
    CHECK(ic.e_poly() == -(kOne + q(2) + q(4)));
    CHECK(ic.euler() == -3);

    CHECK_THROWS_AS(StalkTable({{0, {{0, 0}}}}), std::invalid_argument);
    CHECK_THROWS_AS(StalkTable({{3, {{1, 0}}}}).reduced(), std::logic_error);
    CHECK(StalkTable({{0, {{2, 0}}}}).reduced() == StalkTable({{0, {{1, 0}}}}));
    CHECK(StalkTable({{0, {{1, 0}}}}).reduced().degrees().empty());
}

TEST_CASE("U cohomology has the Betti numbers of a C^*-bundle over Gr(2,6)") {
    const BettiPoly y = betti_grassmannian(2, 6);
    const StalkTable u = link_cohomology_U();
    const auto& g = u.groups();
    for (std::int64_t k = 0; k <= 8; ++k) {
        const Integer b = y.coeff(k) - (k >= 2 ? y.coeff(k - 2) : Integer(0));
        CHECK(Integer(g.count(k) ? g.at(k).size() : 0) == b);
    }
    // Poincare duality on the 17-dimensional real link: degrees k and 17 - k pair up
    for (const auto& [k, _] : g) CHECK(g.count(17 - k) == 1);
}

TEST_CASE("vanishing cycle object") {
    const FilteredHodgeObject obj = vanishing_cycle_object();
    REQUIRE(obj.factors.size() == 3);
    CHECK(obj.factors[0].weight == 14);
    CHECK(obj.factors[1].weight == 15);
    CHECK(obj.factors[2].weight == 16);
    CHECK(obj.factors[0].expected_weight() == 2 * 7);
    CHECK(obj.factors[1].expected_weight() == 9 + 2 * 3);
    CHECK(obj.is_palindromic());
    CHECK(obj.has_assumption(kMonodromyTrivial));
    CHECK_NOTHROW(obj.validate());
}

TEST_CASE("weight rules are enforced at construction") {
    CHECK_THROWS_AS(CompFactor::point("origin", -7, 15), std::invalid_argument);
    CHECK_THROWS_AS(CompFactor::ic("X", SpaceExpr::cone(SpaceExpr::grass(2, 6)), -3, 14), std::invalid_argument);
    CHECK_THROWS_AS(CompFactor::constant("S4", SpaceExpr::affine(3), 3, -4, 12), std::invalid_argument);
    CHECK_NOTHROW(CompFactor::point("origin", 0, 2, 2));

    FilteredHodgeObject bad;
    bad.factors = {CompFactor::point("origin", -8, 16), CompFactor::point("origin", -7, 14)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad.factors = {CompFactor::point("a", -1, 2), CompFactor::point("b", -1, 2)};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("IC of X") {
    const EPair ic = ec_ic_X();
    CHECK(ic.e == -(kOne + q(2) + q(4)));
    CHECK(ic.ec == -(q(5) + q(7) + q(9)));
    CHECK(euler_value(ic.e) == -3);
    const EPair v4 = ec_ic_V4();
    CHECK(v4.ec == q(8) + q(10) + q(12));
}

TEST_CASE("vanishing cycles by both routes") {
    const LaurentPoly2 e = q(3) * (q(5) - q(2) - kOne);
    const LaurentPoly2 e_c = q(7) * (kOne - q(3) - q(5));
    const EPair stalk = ec_vanishing_cycles(Route::StalkStratum);
    const EPair weight = ec_vanishing_cycles(Route::WeightFiltration);
    CHECK(stalk.e == e);
    CHECK(stalk.ec == e_c);
    CHECK(weight.e == e);
    CHECK(weight.ec == e_c);
    CHECK(stalk == weight);
    CHECK(ec_vanishing_cycles_checked() == stalk);
    // factor-wise sum written out
    CHECK(q(7) + q(3) * -(q(5) + q(7) + q(9)) + q(8) == e_c);
    CHECK(self_dual_convert(e, 15) == e_c);
    CHECK(self_dual_convert(e_c, 15) == e);
    CHECK(euler_value(e) == -1);
}

TEST_CASE("E_c of formal objects") {
    FilteredHodgeObject single;
    single.factors = {CompFactor::point("origin", -7, 14)};
    CHECK(ec_of_object(single, {}) == q(7));

    FilteredHodgeObject constant;
    constant.factors = {CompFactor::constant("S", SpaceExpr::affine(3), 3, 0, 3)};
    CHECK(ec_of_object(constant, {}) == -q(3));
    CHECK_THROWS_AS(e_of_object(constant, {}), std::invalid_argument);

    CHECK_THROWS_AS(ec_of_object(vanishing_cycle_object(), {}), std::invalid_argument);

    const FilteredHodgeObject phi4 = restricted_phi4_object();
    CHECK(phi4.is_palindromic());
    std::vector<std::int64_t> weights;
    for (const auto& f : phi4.factors) weights.push_back(f.weight);
    CHECK(weights == std::vector<std::int64_t>{11, 12, 13});
    CHECK(ec_of_object(phi4, {{"V4", ec_ic_V4().ec}}) == -q(7) + q(8) + q(10) + q(12) - q(8));
}

TEST_CASE("twist bookkeeping") {
    const TwistLedger four = twist_bookkeeping_check(4);
    CHECK(four.ambient_dim == 36);
    CHECK(four.twist == 12);
    CHECK(four.reduction_l == 9);
    CHECK(four.reduced_dim == 18);
    CHECK(four.pfaffian_dim == 15);
    CHECK(four.residual == "[3](3)");
    CHECK(four.a1_codim == 24);
    CHECK(four.smooth_net_twist == 0);

    const TwistLedger one = twist_bookkeeping_check(1);
    CHECK(one.ambient_dim == 3);
    CHECK(one.twist == 0);
    CHECK_FALSE(one.reduction_l.has_value());

    const TwistLedger three = twist_bookkeeping_check(3);
    CHECK(three.hilb_dim == 9);
    CHECK(three.a1_twist == -6);
    CHECK(three.smooth_net_twist == 0);

    CHECK_THROWS_AS(twist_bookkeeping_check(0), std::invalid_argument);
}

TEST_CASE("JSON records") {
    const nlohmann::json j = to_json(vanishing_cycle_object());
    REQUIRE(j["factors"].size() == 3);
    CHECK(j["factors"][0]["kind"] == "PointModule");
    CHECK(j["factors"][1]["kind"] == "ICModule");
    CHECK(j["factors"][1]["support"] == "X");
    CHECK(j["factors"][1]["twist"] == -3);
    CHECK(j["factors"][2]["weight"] == 16);
    CHECK(j["assumptions"].size() == 2);
    CHECK(to_json(twist_bookkeeping_check(4))["residual"] == "[3](3)");
    CHECK(j.dump() == to_json(vanishing_cycle_object()).dump());
}
