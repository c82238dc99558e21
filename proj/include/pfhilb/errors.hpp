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

#ifndef PFHILB_ERRORS_HPP
#define PFHILB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfhilb {

/// Malformed polynomial or space-expression text. Line and column are 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// An exhaustive scan would visit more matrices than the configured cap.
class EnumerationCapError : public std::runtime_error {
   public:
    EnumerationCapError(const std::string& estimate, const std::string& cap)
        : std::runtime_error("enumeration of " + estimate + " elements exceeds the cap of " + cap),
          estimate_(estimate) {}

    /// Decimal size of the refused enumeration.
    const std::string& estimate() const noexcept { return estimate_; }

   private:
    std::string estimate_;
};

/// Two computations that must agree did not.
class ConsistencyError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace pfhilb

#endif  // PFHILB_ERRORS_HPP
