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
 * @file fforacle.hpp
 *
 * Exhaustive point counts of skew-symmetric matrix spaces over F_p. These are
 * the independent ground truth for the E-polynomials: for the spaces handled
 * here the number of F_p-points equals E_c evaluated at xy = p.
 *
 * A scan enumerates all p^{n(2n-1)} skew 2n x 2n matrices by mixed-radix
 * index over the free upper-triangle entries (entry k is digit k, least
 * significant first). Index ranges are split across workers; each worker
 * keeps a private tally and tallies are merged by summation, so results do
 * not depend on the worker count.
 */

#ifndef PFHILB_FFORACLE_HPP
#define PFHILB_FFORACLE_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "pfhilb/laurent.hpp"

namespace pfhilb {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

struct ScanOptions {
    std::uint64_t cap = kDefaultEnumerationCap;
    unsigned workers = 1;
};

/// Everything one pass over Sk(2n, F_p) records.
struct ScanTally {
    std::map<std::size_t, Integer> by_rank;  // even rank -> count
    std::vector<Integer> by_pfaffian;        // Pfaffian value in [0, p) -> count
    Integer visited = 0;
    Integer det_spot_checks = 0;  // matrices on which Pf^2 == det was re-verified

    friend bool operator==(const ScanTally&, const ScanTally&) = default;
};

/// Number of matrices a full scan of Sk(2n, F_p) visits, p^{n(2n-1)}.
Integer skew_space_size(std::size_t n, std::uint32_t p);

/// Full scan. Throws EnumerationCapError if the space is larger than
/// opts.cap, std::invalid_argument for a non-prime p or n < 1, and
/// ConsistencyError if a spot check of Pf^2 == det fails.
ScanTally scan_skew_space(std::size_t n, std::uint32_t p, const ScanOptions& opts = {});

/// Rank histogram of Sk(2n, F_p); the counts sum to p^{n(2n-1)}.
std::map<std::size_t, Integer> count_by_rank(std::size_t n, std::uint32_t p, const ScanOptions& opts = {});

/// #{A : Pf(A) = c}.
Integer count_pf_fibre(std::size_t n, std::uint32_t p, std::uint32_t c, const ScanOptions& opts = {});

/// Gaussian binomial [n choose k]_q as a polynomial in q = xy. Throws
/// std::out_of_range unless 0 <= k <= n.
LaurentPoly2 gaussian_binomial(std::int64_t n, std::int64_t k);

/// Which subset of Sk(2n, F_p) a Katz check counts.
struct CountDirective {
    enum class Kind { WholeSpace, RankAtMost, RankExactly, PfaffianValue, PfaffianNonzero, PfaffianZero };

    Kind kind = Kind::WholeSpace;
    std::size_t n = 1;
    std::size_t rank = 0;    // RankAtMost / RankExactly
    std::uint32_t value = 0;  // PfaffianValue

    static CountDirective whole_space(std::size_t n) { return {Kind::WholeSpace, n, 0, 0}; }
    static CountDirective rank_at_most(std::size_t n, std::size_t r) { return {Kind::RankAtMost, n, r, 0}; }
    static CountDirective rank_exactly(std::size_t n, std::size_t r) { return {Kind::RankExactly, n, r, 0}; }
    static CountDirective pfaffian_value(std::size_t n, std::uint32_t c) { return {Kind::PfaffianValue, n, 0, c}; }
    static CountDirective pfaffian_nonzero(std::size_t n) { return {Kind::PfaffianNonzero, n, 0, 0}; }
    static CountDirective pfaffian_zero(std::size_t n) { return {Kind::PfaffianZero, n, 0, 0}; }

    std::string describe() const;
};

/// Reads the requested count off a finished scan.
Integer count_from_tally(const ScanTally& tally, const CountDirective& directive);

struct CountReport {
    std::string label;
    std::uint32_t p = 2;
    Integer observed = 0;
    LaurentPoly2 predicted;
    Integer predicted_value = 0;
    bool match = false;
    Integer enumeration_size = 0;
    std::chrono::duration<double> elapsed{0};
};

/// Memoizes scans per (n, p); safe to share across threads.
class ScanCache {
   public:
    explicit ScanCache(ScanOptions opts = {}) : opts_(opts) {}
    const ScanTally& get(std::size_t n, std::uint32_t p);
    const ScanOptions& options() const noexcept { return opts_; }

   private:
    ScanOptions opts_;
    std::mutex mutex_;
    std::map<std::pair<std::size_t, std::uint32_t>, ScanTally> tallies_;
};

/// Compares the exhaustive count against predicted(xy = p).
CountReport katz_check(const std::string& label, const LaurentPoly2& predicted, std::uint32_t p,
                       const CountDirective& directive, ScanCache& cache);
CountReport katz_check(const std::string& label, const LaurentPoly2& predicted, std::uint32_t p,
                       const CountDirective& directive, const ScanOptions& opts = {});

}  // namespace pfhilb

#endif  // PFHILB_FFORACLE_HPP
