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
 * @file space_parser.hpp
 *
 * Text grammar for space expressions:
 *
 *   union := diff { '+' diff }
 *   diff  := prod { '\' prod }
 *   prod  := atom { '*' atom }
 *   atom  := leaf | 'cone' '(' union ')' | 'fib' '(' union ';' union ')' | '(' union ')'
 *   leaf  := 'point' | 'torus' | name '(' INT { ',' INT } ')'
 *
 * with names affine, proj, grass, gl, sp, homspace, milnorF, pfaffian.
 * Products and complements associate to the left; a chain of unions is one
 * n-ary disjoint union.
 */

#ifndef PFHILB_SPACE_PARSER_HPP
#define PFHILB_SPACE_PARSER_HPP

#include <string_view>

#include "pfhilb/motivic.hpp"

namespace pfhilb {

/// Throws ParseError (with line and column) on a syntax error, an unknown
/// leaf name, a wrong number of arguments or an invalid parameter.
SpaceExpr parse_space_expr(std::string_view text);

}  // namespace pfhilb

#endif  // PFHILB_SPACE_PARSER_HPP
