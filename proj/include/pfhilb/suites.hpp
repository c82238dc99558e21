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
 * @file suites.hpp
 *
 * Named verification suites. Each suite is an ordered list of checks; a check
 * records what was expected, what was computed and whether they agree. A
 * check that throws is recorded as failed with the error text, so a report
 * always lists every check. Enumeration cap refusals are not caught.
 */

#ifndef PFHILB_SUITES_HPP
#define PFHILB_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "pfhilb/fforacle.hpp"

namespace pfhilb {

struct CheckResult {
    std::string description;
    std::string citation;
    std::string expected;
    std::string observed;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;

    std::size_t passed_count() const;
    bool passed() const { return passed_count() == checks.size(); }
};

struct SuiteOptions {
    ScanOptions scan;
    std::vector<std::uint32_t> primes = {2, 3};  // katz suite
};

/// pfaffian, milnor, mhm, hilb4, dt, katz
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name and
/// EnumerationCapError if a katz scan exceeds the cap.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts = {});

enum class ReportFormat { Text, Json };

/// {suite, checks: [{description, citation, expected, observed, pass}],
///  summary: {total, passed}}
nlohmann::json report_json(const SuiteResult& result);
/// {suites: [...], summary: {total, passed}} over several suites.
nlohmann::json report_json(const std::vector<SuiteResult>& results);

/// Deterministic rendering; JSON keys are sorted and indented by two spaces.
std::string emit_report(const SuiteResult& result, ReportFormat format);
std::string emit_report(const std::vector<SuiteResult>& results, ReportFormat format);

}  // namespace pfhilb

#endif  // PFHILB_SUITES_HPP
