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

#ifndef PFHILB_TEXT_CURSOR_HPP
#define PFHILB_TEXT_CURSOR_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "pfhilb/errors.hpp"
#include "pfhilb/laurent.hpp"

namespace pfhilb {

/// Largest accepted input for the text grammars.
inline constexpr std::size_t kMaxInputBytes = 64 * 1024;

/// Character cursor shared by the recursive-descent parsers; tracks line and
/// column for error messages.
class TextCursor {
   public:
    explicit TextCursor(std::string_view text) : text_(text) {
        if (text.size() > kMaxInputBytes) throw ParseError("input exceeds 64 KiB", 1, 1);
    }

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const noexcept { return at_end() ? '\0' : text_[pos_]; }
    std::size_t pos() const noexcept { return pos_; }

    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }

    bool accept(char c) {
        if (peek() != c || at_end()) return false;
        advance();
        return true;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    Integer integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(advance());
        return Integer(digits);
    }

    std::string identifier() {
        std::string id;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') id.push_back(advance());
        if (id.empty()) fail("expected a name");
        return id;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

}  // namespace pfhilb

#endif  // PFHILB_TEXT_CURSOR_HPP
