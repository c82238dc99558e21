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

#include "pfhilb/fforacle.hpp"

#include <algorithm>
#include <exception>
#include <thread>

#include "pfhilb/errors.hpp"
#include "pfhilb/skewalg.hpp"

namespace pfhilb {

namespace {

constexpr std::uint64_t kSpotCheckStride = 100;

struct WorkerTally {
    std::vector<std::uint64_t> by_rank;
    std::vector<std::uint64_t> by_pfaffian;
    std::uint64_t visited = 0;
    std::uint64_t spot_checks = 0;
};

void scan_range(std::size_t n, const PrimeField& field, std::uint64_t begin, std::uint64_t end, WorkerTally& out) {
    const std::uint32_t p = field.characteristic();
    SkewMatrix<PrimeField> a(field, 2 * n);
    const std::size_t entries = a.upper().size();

    std::uint64_t rem = begin;
    for (std::size_t k = 0; k < entries; ++k) {
        a.set_upper(k, static_cast<std::uint32_t>(rem % p));
        rem /= p;
    }

    out.by_rank.assign(2 * n + 1, 0);
    out.by_pfaffian.assign(p, 0);
    for (std::uint64_t index = begin; index < end; ++index) {
        const auto pf = pfaffian(a);
        const std::size_t r = skew_rank(a);
        ++out.by_rank[r];
        ++out.by_pfaffian[pf];
        if (index % kSpotCheckStride == 0) {
            if (determinant(a.to_square()) != field.mul(pf, pf))
                throw ConsistencyError("Pf^2 != det at scan index " + std::to_string(index));
            if ((r == 2 * n) != (pf != 0))
                throw ConsistencyError("full rank disagrees with Pf != 0 at scan index " + std::to_string(index));
            ++out.spot_checks;
        }
        ++out.visited;

        // odometer step
        for (std::size_t k = 0; k < entries; ++k) {
            const std::uint32_t v = a.upper()[k] + 1;
            if (v < p) {
                a.set_upper(k, v);
                break;
            }
            a.set_upper(k, 0);
        }
    }
}

}  // namespace

Integer skew_space_size(std::size_t n, std::uint32_t p) {
    return boost::multiprecision::pow(Integer(p), static_cast<unsigned>(n * (2 * n - 1)));
}

ScanTally scan_skew_space(std::size_t n, std::uint32_t p, const ScanOptions& opts) {
    if (n < 1) throw std::invalid_argument("scan needs n >= 1");
    const PrimeField field(p);
    const Integer total = skew_space_size(n, p);
    if (total > opts.cap) throw EnumerationCapError(total.str(), std::to_string(opts.cap));
    const auto count = total.convert_to<std::uint64_t>();

    const unsigned workers = std::max(1u, opts.workers);
    std::vector<WorkerTally> tallies(workers);
    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = count / workers * w + std::min<std::uint64_t>(w, count % workers);
            const std::uint64_t end = begin + count / workers + (w < count % workers ? 1 : 0);
            threads.emplace_back([&, w, begin, end] {
                try {
                    scan_range(n, field, begin, end, tallies[w]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    ScanTally merged;
    merged.by_pfaffian.assign(p, 0);
    for (const auto& t : tallies) {
        for (std::size_t r = 0; r < t.by_rank.size(); ++r)
            if (t.by_rank[r] != 0) merged.by_rank[r] += t.by_rank[r];
        for (std::size_t v = 0; v < t.by_pfaffian.size(); ++v) merged.by_pfaffian[v] += t.by_pfaffian[v];
        merged.visited += t.visited;
        merged.det_spot_checks += t.spot_checks;
    }
    if (merged.visited != total) throw ConsistencyError("scan visited a different number of matrices than p^N");
    return merged;
}

std::map<std::size_t, Integer> count_by_rank(std::size_t n, std::uint32_t p, const ScanOptions& opts) {
    return scan_skew_space(n, p, opts).by_rank;
}

Integer count_pf_fibre(std::size_t n, std::uint32_t p, std::uint32_t c, const ScanOptions& opts) {
    if (c >= p) throw std::invalid_argument("fibre value must be a residue in [0, p)");
    return scan_skew_space(n, p, opts).by_pfaffian[c];
}

LaurentPoly2 gaussian_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) throw std::out_of_range("gaussian_binomial needs 0 <= k <= n");
    LaurentPoly2 num(1), den(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        num *= LaurentPoly2(1) - LaurentPoly2::q_power(n - k + i);
        den *= LaurentPoly2(1) - LaurentPoly2::q_power(i);
    }
    return tate_divide_exact(num, den);
}

std::string CountDirective::describe() const {
    const std::string space = "Sk(" + std::to_string(2 * n) + ")";
    switch (kind) {
        case Kind::WholeSpace:
            return space;
        case Kind::RankAtMost:
            return space + " rank <= " + std::to_string(rank);
        case Kind::RankExactly:
            return space + " rank = " + std::to_string(rank);
        case Kind::PfaffianValue:
            return space + " Pf = " + std::to_string(value);
        case Kind::PfaffianNonzero:
            return space + " Pf != 0";
        case Kind::PfaffianZero:
            return space + " Pf = 0";
    }
    return space;
}

Integer count_from_tally(const ScanTally& tally, const CountDirective& directive) {
    using Kind = CountDirective::Kind;
    Integer sum = 0;
    switch (directive.kind) {
        case Kind::WholeSpace:
            return tally.visited;
        case Kind::RankAtMost:
            for (const auto& [r, c] : tally.by_rank)
                if (r <= directive.rank) sum += c;
            return sum;
        case Kind::RankExactly: {
            auto it = tally.by_rank.find(directive.rank);
            return it == tally.by_rank.end() ? Integer(0) : it->second;
        }
        case Kind::PfaffianValue:
            if (directive.value >= tally.by_pfaffian.size()) throw std::invalid_argument("fibre value out of range");
            return tally.by_pfaffian[directive.value];
        case Kind::PfaffianNonzero:
            for (std::size_t v = 1; v < tally.by_pfaffian.size(); ++v) sum += tally.by_pfaffian[v];
            return sum;
        case Kind::PfaffianZero:
            return tally.by_pfaffian.at(0);
    }
    return sum;
}

const ScanTally& ScanCache::get(std::size_t n, std::uint32_t p) {
    std::lock_guard lock(mutex_);
    auto it = tallies_.find({n, p});
    if (it == tallies_.end()) it = tallies_.emplace(std::make_pair(n, p), scan_skew_space(n, p, opts_)).first;
    return it->second;
}

CountReport katz_check(const std::string& label, const LaurentPoly2& predicted, std::uint32_t p,
                       const CountDirective& directive, ScanCache& cache) {
    const auto start = std::chrono::steady_clock::now();
    CountReport report;
    report.label = label;
    report.p = p;
    report.predicted = predicted;
    report.predicted_value = eval_q(predicted, p);
    const ScanTally& tally = cache.get(directive.n, p);
    report.observed = count_from_tally(tally, directive);
    report.enumeration_size = tally.visited;
    report.match = report.observed == report.predicted_value;
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

CountReport katz_check(const std::string& label, const LaurentPoly2& predicted, std::uint32_t p,
                       const CountDirective& directive, const ScanOptions& opts) {
    ScanCache cache(opts);
    return katz_check(label, predicted, p, directive, cache);
}

}  // namespace pfhilb
