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

/*
 * Polynomial text grammar:
 *
 *   expr     := ['+' | '-'] term { ('+' | '-') term }
 *   term     := factor { '*' factor }
 *   factor   := primary [ '^' exponent ]
 *   exponent := ['-'] INT | '(' ['-'] INT ')'
 *   primary  := INT | 'x' | 'y' | 'q' | '(' expr ')'
 *
 * 'q' abbreviates x*y. Negative exponents are accepted on monomials only.
 */

#include <cctype>
#include <cstdint>

#include "pfhilb/errors.hpp"
#include "pfhilb/laurent.hpp"
#include "pfhilb/text_cursor.hpp"

namespace pfhilb {

namespace {

class PolyParser {
   public:
    explicit PolyParser(std::string_view text) : cur_(text) {}

    LaurentPoly2 parse() {
        LaurentPoly2 p = expr();
        cur_.skip_space();
        if (!cur_.at_end()) cur_.fail("unexpected character '" + std::string(1, cur_.peek()) + "'");
        return p;
    }

   private:
    LaurentPoly2 expr() {
        cur_.skip_space();
        bool negate = false;
        if (cur_.accept('-'))
            negate = true;
        else
            cur_.accept('+');
        LaurentPoly2 acc = term();
        if (negate) acc = -acc;
        for (;;) {
            cur_.skip_space();
            if (cur_.accept('+'))
                acc += term();
            else if (cur_.accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    LaurentPoly2 term() {
        LaurentPoly2 acc = factor();
        for (;;) {
            cur_.skip_space();
            if (!cur_.accept('*')) return acc;
            acc *= factor();
        }
    }

    LaurentPoly2 factor() {
        LaurentPoly2 base = primary();
        cur_.skip_space();
        if (!cur_.accept('^')) return base;
        const std::int64_t e = exponent();
        if (e >= 0) return pow(base, static_cast<unsigned>(e));
        if (base.term_count() != 1) cur_.fail("negative exponent on a non-monomial");
        const auto& [exp, c] = *base.terms().begin();
        if (c != 1 && c != -1) cur_.fail("negative exponent on a non-unit coefficient");
        const Integer sign = (c == -1 && (e % 2 != 0)) ? -1 : 1;
        return LaurentPoly2::monomial(sign, exp.a * e, exp.b * e);
    }

    std::int64_t exponent() {
        cur_.skip_space();
        const bool paren = cur_.accept('(');
        cur_.skip_space();
        const bool negative = cur_.accept('-');
        cur_.skip_space();
        const Integer value = cur_.integer();
        if (value > Integer(1) << 40) cur_.fail("exponent too large");
        if (paren) {
            cur_.skip_space();
            cur_.expect(')');
        }
        const auto v = value.convert_to<std::int64_t>();
        return negative ? -v : v;
    }

    LaurentPoly2 primary() {
        cur_.skip_space();
        if (cur_.at_end()) cur_.fail("unexpected end of input");
        const char c = cur_.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) return LaurentPoly2(cur_.integer());
        if (cur_.accept('x')) return LaurentPoly2::x();
        if (cur_.accept('y')) return LaurentPoly2::y();
        if (cur_.accept('q')) return LaurentPoly2::q();
        if (cur_.accept('(')) {
            LaurentPoly2 inner = expr();
            cur_.skip_space();
            cur_.expect(')');
            return inner;
        }
        cur_.fail("unexpected character '" + std::string(1, c) + "'");
    }

    TextCursor cur_;
};

}  // namespace

LaurentPoly2 parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace pfhilb
