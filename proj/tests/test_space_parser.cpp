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
#include "pfhilb/space_parser.hpp"
#include "test_support.hpp"

using namespace pfhilb;

TEST_CASE("grammar examples") {
    const SpaceExpr x = SpaceExpr::cone(SpaceExpr::grass(2, 6));
    CHECK(parse_space_expr("cone(grass(2,6))") == x);
    CHECK(parse_space_expr("affine(3) * cone(grass(2,6))") == SpaceExpr::product(SpaceExpr::affine(3), x));
    CHECK(parse_space_expr("fib(proj(2); affine(2))") ==
          SpaceExpr::fibration(SpaceExpr::proj(2), SpaceExpr::affine(2)));
    CHECK(parse_space_expr("point") == SpaceExpr::point());
    CHECK(parse_space_expr("torus") == SpaceExpr::torus());
    CHECK(parse_space_expr("gl(6)") == SpaceExpr::gl(6));
    CHECK(parse_space_expr("sp(6)") == SpaceExpr::sp(6));
    CHECK(parse_space_expr("milnorF(3)") == SpaceExpr::milnor_fibre(3));
    CHECK(parse_space_expr("homspace(3)") == SpaceExpr::homspace(3));
    CHECK(parse_space_expr("pfaffian(3)") == SpaceExpr::pfaffian_hypersurface(3));
    CHECK(parse_space_expr("  affine( 3 )\n*\tproj(1) ") ==
          SpaceExpr::product(SpaceExpr::affine(3), SpaceExpr::proj(1)));
}

TEST_CASE("precedence and associativity") {
    const SpaceExpr a = SpaceExpr::affine(1), b = SpaceExpr::affine(2), c = SpaceExpr::affine(3);
    CHECK(parse_space_expr("affine(1) * affine(2) * affine(3)") ==
          SpaceExpr::product(SpaceExpr::product(a, b), c));
    CHECK(parse_space_expr("affine(1) \\ affine(2) \\ affine(3)") ==
          SpaceExpr::complement(SpaceExpr::complement(a, b), c));
    CHECK(parse_space_expr("affine(1) + affine(2) + affine(3)") == SpaceExpr::disjoint({a, b, c}));
    CHECK(parse_space_expr("(affine(1) + affine(2)) + affine(3)") ==
          SpaceExpr::disjoint({SpaceExpr::disjoint({a, b}), c}));
    CHECK(parse_space_expr("affine(1) + affine(2) * affine(3)") ==
          SpaceExpr::disjoint({a, SpaceExpr::product(b, c)}));
    CHECK(parse_space_expr("affine(1) \\ affine(2) * affine(3)") ==
          SpaceExpr::complement(a, SpaceExpr::product(b, c)));
    CHECK(parse_space_expr("affine(1) * (affine(2) \\ affine(3))") ==
          SpaceExpr::product(a, SpaceExpr::complement(b, c)));
}

TEST_CASE("printer round trip on random trees up to depth 6") {
    pfhilb::testing::Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const SpaceExpr e = pfhilb::testing::random_space(rng, 6);
        const std::string text = to_string(e);
        const SpaceExpr back = parse_space_expr(text);
        CHECK(back == e);
        CHECK(to_string(back) == text);
    }
}

TEST_CASE("parsed expressions evaluate") {
    CHECK(ec(parse_space_expr("affine(15) \\ pfaffian(3)")) == ec(SpaceExpr::homspace(3)));
    CHECK(eval_q(ec(parse_space_expr("cone(grass(2,6))")), 2) == 652);
}

TEST_CASE("errors") {
    auto position = [](const std::string& text) {
        try {
            parse_space_expr(text);
        } catch (const ParseError& e) {
            return std::make_pair(e.line(), e.column());
        }
        return std::make_pair(std::size_t{0}, std::size_t{0});
    };
    CHECK(position("affine(3) *") == std::make_pair(std::size_t{1}, std::size_t{12}));
    CHECK(position("affine(3)\n  * blah(2)") == std::make_pair(std::size_t{2}, std::size_t{5}));
    CHECK(position("grass(2)") == std::make_pair(std::size_t{1}, std::size_t{1}));
    CHECK(position("affine(3) )") == std::make_pair(std::size_t{1}, std::size_t{11}));

    CHECK_THROWS_AS(parse_space_expr(""), ParseError);
    CHECK_THROWS_AS(parse_space_expr("affine"), ParseError);
    CHECK_THROWS_AS(parse_space_expr("point(1)"), ParseError);
    CHECK_THROWS_AS(parse_space_expr("affine(1,2)"), ParseError);
    CHECK_THROWS_AS(parse_space_expr("affine(-1)"), ParseError);
    CHECK_THROWS_AS(parse_space_expr("cone(affine(2))"), ParseError);
    CHECK_THROWS_AS(parse_space_expr("fib(point, point)"), ParseError);
    CHECK_THROWS_AS(parse_space_expr("affine(99999999999)"), ParseError);
    std::string big = "point";
    while (big.size() <= 64 * 1024) big += " * point";
    CHECK_THROWS_AS(parse_space_expr(big), ParseError);
}
