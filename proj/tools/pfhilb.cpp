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


// pfhilb: command-line front end.
//
// Exit status: 0 all checks pass, 1 verification failure, 2 usage or parse
// error, 3 enumeration refused by the cap.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pfhilb/errors.hpp"
#include "pfhilb/fforacle.hpp"
#include "pfhilb/hilbert.hpp"
#include "pfhilb/motivic.hpp"
#include "pfhilb/skewalg.hpp"
#include "pfhilb/space_parser.hpp"
#include "pfhilb/suites.hpp"

namespace {

using namespace pfhilb;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Globals {
    std::string format = "text";
    unsigned workers = 1;
    std::optional<std::uint64_t> cap;

    bool json_out() const { return format == "json"; }
    ReportFormat report_format() const { return json_out() ? ReportFormat::Json : ReportFormat::Text; }
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t resolve_cap(const Globals& g) {
    if (g.cap) return *g.cap;
    if (const char* env = std::getenv("MOTIVIC_CAP")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (const std::exception&) {
            throw UsageError(std::string("MOTIVIC_CAP is not a non-negative integer: ") + env);
        }
    }
    return kDefaultEnumerationCap;
}

ScanOptions scan_options(const Globals& g) { return {resolve_cap(g), g.workers}; }

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string trace_text(const EvalStep& s, int depth) {
    std::string out(static_cast<std::size_t>(2 * depth), ' ');
    out += s.expr + "  [" + s.rule + "]  " + to_string(s.result) + "\n";
    for (const auto& n : s.notes) out += std::string(static_cast<std::size_t>(2 * depth + 4), ' ') + "- " + n + "\n";
    for (const auto& c : s.children) out += trace_text(c, depth + 1);
    return out;
}

json trace_json(const EvalStep& s) {
    json children = json::array();
    for (const auto& c : s.children) children.push_back(trace_json(c));
    return {{"expr", s.expr}, {"rule", s.rule}, {"result", to_string(s.result)}, {"notes", s.notes}, {"children", children}};
}

int cmd_epoly(const Globals& g, const std::string& text, bool trace) {
    const SpaceExpr e = parse_space_expr(text);
    EvalStep step;
    const LaurentPoly2 p = ec(e, InclusionRegistry::builtin(), trace ? &step : nullptr);
    if (g.json_out()) {
        json j = {{"expr", to_string(e)}, {"ec", to_string(p)}, {"euler", euler_value(p).str()}, {"tate", p.is_tate()}};
        if (trace) j["trace"] = trace_json(step);
        print_json(j);
    } else {
        std::cout << to_string(p) << '\n';
        if (trace) std::cout << trace_text(step, 0);
    }
    return kExitPass;
}

int cmd_count_rank(const Globals& g, std::size_t n, std::uint32_t p) {
    const auto counts = count_by_rank(n, p, scan_options(g));
    Integer total = 0;
    for (const auto& [r, c] : counts) total += c;
    if (g.json_out()) {
        json by_rank = json::object();
        for (const auto& [r, c] : counts) by_rank[std::to_string(r)] = c.str();
        print_json({{"n", n}, {"p", p}, {"by_rank", by_rank}, {"total", total.str()}});
    } else {
        for (const auto& [r, c] : counts) std::cout << "rank " << r << ": " << c << '\n';
        std::cout << "total: " << total << '\n';
    }
    return kExitPass;
}

int cmd_count_fibre(const Globals& g, std::size_t n, std::uint32_t p, std::uint32_t value) {
    const Integer c = count_pf_fibre(n, p, value, scan_options(g));
    if (g.json_out())
        print_json({{"n", n}, {"p", p}, {"value", value}, {"count", c.str()}});
    else
        std::cout << c << '\n';
    return kExitPass;
}

int emit_suites(const Globals& g, const std::vector<SuiteResult>& results) {
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed();
    if (results.size() == 1)
        std::cout << emit_report(results.front(), g.report_format());
    else
        std::cout << emit_report(results, g.report_format());
    return ok ? kExitPass : kExitFail;
}

int cmd_verify(const Globals& g, const std::string& name, const std::vector<std::uint32_t>& primes) {
    SuiteOptions opts;
    opts.scan = scan_options(g);
    if (!primes.empty()) opts.primes = primes;
    return emit_suites(g, {run_suite(name, opts)});
}

int cmd_report(const Globals& g, std::vector<std::string> names, const std::vector<std::uint32_t>& primes) {
    if (names.empty()) names = suite_names();
    SuiteOptions opts;
    opts.scan = scan_options(g);
    if (!primes.empty()) opts.primes = primes;
    std::vector<SuiteResult> results;
    for (const auto& n : names) results.push_back(run_suite(n, opts));
    return emit_suites(g, results);
}

int cmd_hilb4_total(const Globals& g) {
    const LaurentPoly2 total = ec_hilb4_total();
    if (g.json_out())
        print_json({{"ec", to_string(total)},
                    {"euler", euler_value(total).str()},
                    {"expected", to_string(expected_hilb4_total())},
                    {"match", total == expected_hilb4_total()}});
    else
        std::cout << to_string(total) << '\n';
    return kExitPass;
}

int cmd_hilb4_strata(const Globals& g) {
    const SuiteResult checks = run_suite("hilb4");
    const auto strata = hilb4_strata();
    if (g.json_out()) {
        json rows = json::array();
        for (std::size_t i = 0; i < strata.size(); ++i) {
            const auto& s = strata[i];
            rows.push_back({{"label", to_string(s.label)},
                            {"geometry", s.geometry_text},
                            {"coefficient", s.coefficient},
                            {"ec", to_string(s.contribution)},
                            {"citation", s.citation},
                            {"match", checks.checks.at(i).pass}});
        }
        const auto& total = checks.checks.back();
        print_json({{"strata", rows},
                    {"total", {{"ec", total.observed}, {"citation", total.citation}, {"match", total.pass}}}});
    } else {
        for (const auto& s : strata)
            std::cout << to_string(s.label) << "  " << s.geometry_text << "  [" << s.coefficient << "]\n    "
                      << to_string(s.contribution) << '\n';
        std::cout << "total\n    " << checks.checks.back().observed << '\n';
    }
    return checks.passed() ? kExitPass : kExitFail;
}

int cmd_dt_count(const Globals& g, std::int64_t m, bool list) {
    const auto pps = plane_partitions(m);
    const Integer mac = m == 0 ? Integer(1) : euler_value(macmahon_series(m).coeff(m));
    const bool match = Integer(pps.size()) == mac;
    if (g.json_out()) {
        json j = {{"m", m}, {"count", pps.size()}, {"macmahon", mac.str()}, {"match", match}};
        if (list) {
            json arr = json::array();
            for (const auto& pp : pps) arr.push_back(pp.heights);
            j["partitions"] = arr;
        }
        print_json(j);
    } else {
        std::cout << pps.size() << '\n';
        if (list)
            for (const auto& pp : pps) std::cout << to_string(pp) << '\n';
    }
    return match ? kExitPass : kExitFail;
}

int cmd_goettsche(const Globals& g, std::int64_t n) {
    const LaurentPoly2 a = goettsche_generating(n);
    const LaurentPoly2 b = goettsche_partition_sum(n);
    if (g.json_out())
        print_json({{"n", n},
                    {"ec", to_string(a)},
                    {"generating_function", to_string(a)},
                    {"partition_sum", to_string(b)},
                    {"match", a == b}});
    else
        std::cout << to_string(a) << '\n';
    return a == b ? kExitPass : kExitFail;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact E-polynomials of Pfaffian strata and of Hilb^4(C^3)"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--workers", g.workers, "Worker threads for exhaustive scans")->check(CLI::Range(1u, 256u));
    app.add_option_function<std::uint64_t>("--cap", [&](const std::uint64_t& c) { g.cap = c; },
                                           "Largest enumeration allowed (default 1e8, or MOTIVIC_CAP)");

    std::function<int()> action;

    auto* epoly = app.add_subcommand("epoly", "E_c of a space expression");
    std::string expr;
    bool trace = false;
    epoly->add_option("expr", expr, "Space expression, e.g. 'affine(3) * cone(grass(2,6))'")->required();
    epoly->add_flag("--trace", trace, "Print the evaluation derivation");
    epoly->callback([&] { action = [&] { return cmd_epoly(g, expr, trace); }; });

    auto* count = app.add_subcommand("count", "Exhaustive counts over F_p");
    count->require_subcommand(1);
    std::size_t n = 3;
    std::uint32_t p = 2, value = 1;
    auto* rank = count->add_subcommand("rank", "Rank histogram of Sk(2n, F_p)");
    rank->add_option("--n", n, "Half size")->check(CLI::Range(1u, 16u));
    rank->add_option("--p", p, "Prime");
    rank->callback([&] { action = [&] { return cmd_count_rank(g, n, p); }; });
    auto* fibre = count->add_subcommand("pfaffian-fibre", "#{A in Sk(2n, F_p) : Pf(A) = value}");
    fibre->add_option("--n", n, "Half size")->check(CLI::Range(1u, 16u));
    fibre->add_option("--p", p, "Prime");
    fibre->add_option("--value", value, "Fibre value");
    fibre->callback([&] { action = [&] { return cmd_count_fibre(g, n, p, value); }; });

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    std::vector<std::uint32_t> primes;
    std::string suite;
    auto* katz = verify->add_subcommand("katz", "Finite-field point counts against E_c");
    std::vector<std::string> katz_with;
    katz->add_option("--p", primes, "Prime(s); default 2 and 3");
    katz->add_option("--suite", katz_with, "Other suites to report alongside the counts");
    katz->callback([&] {
        action = [&] {
            katz_with.push_back("katz");
            return cmd_report(g, katz_with, primes);
        };
    });
    auto* vsuite = verify->add_subcommand("suite", "Run a named suite");
    vsuite->add_option("name", suite, "pfaffian, milnor, mhm, hilb4, dt or katz")->required();
    vsuite->add_option("--p", primes, "Primes for the katz suite");
    vsuite->callback([&] { action = [&] { return cmd_verify(g, suite, primes); }; });

    auto* hilb4 = app.add_subcommand("hilb4", "E_c of Hilb^4(C^3) with vanishing-cycle coefficients");
    hilb4->require_subcommand(1);
    hilb4->add_subcommand("total", "Total E_c")->callback([&] { action = [&] { return cmd_hilb4_total(g); }; });
    hilb4->add_subcommand("strata", "Per-stratum contributions")->callback([&] {
        action = [&] { return cmd_hilb4_strata(g); };
    });

    auto* dt = app.add_subcommand("dt", "Plane-partition counts");
    dt->require_subcommand(1);
    std::int64_t m = 4;
    bool list = false;
    auto* dtcount = dt->add_subcommand("count", "Number of plane partitions of weight m");
    dtcount->add_option("--m", m, "Weight")->check(CLI::Range(std::int64_t{0}, kDefaultPlanePartitionCap));
    dtcount->add_flag("--list", list, "List the partitions");
    dtcount->callback([&] { action = [&] { return cmd_dt_count(g, m, list); }; });

    auto* goe = app.add_subcommand("goettsche", "E_c(Hilb^n(C^2))");
    std::int64_t gn = 4;
    goe->add_option("--n", gn, "Number of points")->check(CLI::Range(std::int64_t{0}, std::int64_t{200}));
    goe->callback([&] { action = [&] { return cmd_goettsche(g, gn); }; });

    auto* report = app.add_subcommand("report", "Run suites and emit one report");
    std::vector<std::string> names;
    report->add_option("--suite", names, "Suites to include (default all)");
    report->add_option("--p", primes, "Primes for the katz suite");
    report->callback([&] { action = [&] { return cmd_report(g, names, primes); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        return action();
    } catch (const EnumerationCapError& e) {
        std::cerr << "pfhilb: " << e.what() << '\n';
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "pfhilb: parse error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "pfhilb: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        std::cerr << "pfhilb: consistency failure: " << e.what() << '\n';
        return kExitFail;
    } catch (const std::invalid_argument& e) {
        std::cerr << "pfhilb: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "pfhilb: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "pfhilb: " << e.what() << '\n';
        return kExitFail;
    }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
