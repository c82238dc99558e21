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


#include "pfhilb/space_parser.hpp"

#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "pfhilb/text_cursor.hpp"

namespace pfhilb {

namespace {

const std::map<std::string, std::size_t>& leaf_arity() {
    static const std::map<std::string, std::size_t> table = {
        {"point", 0}, {"torus", 0},    {"affine", 1},  {"proj", 1},     {"grass", 2},
        {"gl", 1},    {"sp", 1},       {"homspace", 1}, {"milnorF", 1}, {"pfaffian", 1},
    };
    return table;
}

class SpaceParser {
   public:
    explicit SpaceParser(std::string_view text) : cur_(text) {}

    SpaceExpr parse() {
        cur_.skip_space();
        SpaceExpr e = parse_union();
        cur_.skip_space();
        if (!cur_.at_end()) cur_.fail(std::string("unexpected '") + cur_.peek() + "'");
        return e;
    }

   private:
    SpaceExpr parse_union() {
        std::vector<SpaceExpr> parts{parse_diff()};
        while (accept_op('+')) parts.push_back(parse_diff());
        return parts.size() == 1 ? parts.front() : SpaceExpr::disjoint(std::move(parts));
    }

    SpaceExpr parse_diff() {
        SpaceExpr e = parse_prod();
        while (accept_op('\\')) e = SpaceExpr::complement(e, parse_prod());
        return e;
    }

    SpaceExpr parse_prod() {
        SpaceExpr e = parse_atom();
        while (accept_op('*')) e = SpaceExpr::product(e, parse_atom());
        return e;
    }

    SpaceExpr parse_atom() {
        cur_.skip_space();
        if (cur_.accept('(')) {
            SpaceExpr e = parse_union();
            close();
            return e;
        }
        const std::size_t line = cur_.line(), column = cur_.column();
        const std::string name = cur_.identifier();
        if (name == "cone") {
            open();
            SpaceExpr inner = parse_union();
            close();
            return build(line, column, [&] { return SpaceExpr::cone(inner); });
        }
        if (name == "fib") {
            open();
            SpaceExpr base = parse_union();
            cur_.skip_space();
            cur_.expect(';');
            SpaceExpr fibre = parse_union();
            close();
            return SpaceExpr::fibration(base, fibre);
        }
        auto it = leaf_arity().find(name);
        if (it == leaf_arity().end()) throw ParseError("unknown space '" + name + "'", line, column);

        std::vector<std::int64_t> args;
        cur_.skip_space();
        if (cur_.peek() == '(') {
            open();
            args.push_back(integer_arg());
            while (true) {
                cur_.skip_space();
                if (!cur_.accept(',')) break;
                args.push_back(integer_arg());
            }
            close();
        }
        if (args.size() != it->second)
            throw ParseError("'" + name + "' takes " + std::to_string(it->second) + " argument(s), got " +
                                 std::to_string(args.size()),
                             line, column);
        return build(line, column, [&] { return make_leaf(name, args); });
    }

    static SpaceExpr make_leaf(const std::string& name, const std::vector<std::int64_t>& a) {
        if (name == "point") return SpaceExpr::point();
        if (name == "torus") return SpaceExpr::torus();
        if (name == "affine") return SpaceExpr::affine(a[0]);
        if (name == "proj") return SpaceExpr::proj(a[0]);
        if (name == "grass") return SpaceExpr::grass(a[0], a[1]);
        if (name == "gl") return SpaceExpr::gl(a[0]);
        if (name == "sp") return SpaceExpr::sp(a[0]);
        if (name == "homspace") return SpaceExpr::homspace(a[0]);
        if (name == "milnorF") return SpaceExpr::milnor_fibre(a[0]);
        return SpaceExpr::pfaffian_hypersurface(a[0]);
    }

    // Constructor validation errors become parse errors at the leaf.
    template <class F>
    static SpaceExpr build(std::size_t line, std::size_t column, F&& make) {
        try {
            return make();
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), line, column);
        }
    }

    std::int64_t integer_arg() {
        cur_.skip_space();
        const bool negative = cur_.accept('-');
        const Integer v = cur_.integer();
        if (v > std::numeric_limits<std::int32_t>::max()) cur_.fail("parameter too large");
        const auto n = v.convert_to<std::int64_t>();
        return negative ? -n : n;
    }

    bool accept_op(char op) {
        cur_.skip_space();
        return cur_.accept(op);
    }

    void open() {
        cur_.skip_space();
        cur_.expect('(');
    }

    void close() {
        cur_.skip_space();
        cur_.expect(')');
    }

    TextCursor cur_;
};

}  // namespace

SpaceExpr parse_space_expr(std::string_view text) { return SpaceParser(text).parse(); }

}  // namespace pfhilb
