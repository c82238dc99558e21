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

#include "pfhilb/hilbert.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pfhilb/errors.hpp"
#include "pfhilb/mhm.hpp"

namespace pfhilb {

namespace {

LaurentPoly2 q(std::int64_t k) { return LaurentPoly2::q_power(k); }

void partitions_rec(std::int64_t remaining, std::int64_t max_part, std::vector<std::int64_t>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back({cur});
        return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

// Rows of weight exactly `sum`, entrywise bounded by `above`, weakly
// decreasing, largest first in lexicographic order.
void rows_rec(const std::vector<std::int64_t>& above, std::int64_t sum, std::vector<std::int64_t>& row,
              std::vector<std::vector<std::int64_t>>& out) {
    if (sum == 0) {
        out.push_back(row);
        return;
    }
    const std::size_t i = row.size();
    if (i >= above.size()) return;
    const std::int64_t bound = std::min({above[i], sum, row.empty() ? sum : row.back()});
    for (std::int64_t h = bound; h >= 1; --h) {
        row.push_back(h);
        rows_rec(above, sum - h, row, out);
        row.pop_back();
    }
}

void plane_rec(std::int64_t remaining, std::vector<std::vector<std::int64_t>>& rows,
               std::vector<PlanePartition>& out) {
    if (remaining == 0) {
        out.push_back({rows});
        return;
    }
    // the first row is only bounded by the weight
    const std::vector<std::int64_t> above =
        rows.empty() ? std::vector<std::int64_t>(static_cast<std::size_t>(remaining), remaining) : rows.back();
    const std::int64_t above_sum = std::accumulate(above.begin(), above.end(), std::int64_t{0});
    for (std::int64_t s = std::min(remaining, above_sum); s >= 1; --s) {
        std::vector<std::vector<std::int64_t>> candidates;
        std::vector<std::int64_t> row;
        rows_rec(above, s, row, candidates);
        for (auto& c : candidates) {
            rows.push_back(std::move(c));
            plane_rec(remaining - s, rows, out);
            rows.pop_back();
        }
    }
}

}  // namespace

std::int64_t Partition::weight() const noexcept { return std::accumulate(parts.begin(), parts.end(), std::int64_t{0}); }

std::vector<Partition> partitions(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("partitions of a negative number");
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::int64_t PlanePartition::weight() const noexcept {
    std::int64_t w = 0;
    for (const auto& r : heights) w = std::accumulate(r.begin(), r.end(), w);
    return w;
}

bool PlanePartition::is_valid() const {
    for (std::size_t i = 0; i < heights.size(); ++i) {
        const auto& r = heights[i];
        if (r.empty()) return false;
        for (std::size_t j = 0; j < r.size(); ++j) {
            if (r[j] < 1) return false;
            if (j > 0 && r[j] > r[j - 1]) return false;
            if (i > 0 && (j >= heights[i - 1].size() || r[j] > heights[i - 1][j])) return false;
        }
    }
    return true;
}

std::string to_string(const PlanePartition& pp) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < pp.heights.size(); ++i) {
        if (i > 0) os << ' ';
        os << '[';
        for (std::size_t j = 0; j < pp.heights[i].size(); ++j) os << (j > 0 ? "," : "") << pp.heights[i][j];
        os << ']';
    }
    os << ']';
    return os.str();
}

std::vector<PlanePartition> plane_partitions(std::int64_t m, std::int64_t cap) {
    if (m < 0) throw std::invalid_argument("plane partitions of negative weight");
    if (m > cap) throw EnumerationCapError("plane partitions of weight " + std::to_string(m), std::to_string(cap));
    std::vector<PlanePartition> out;
    std::vector<std::vector<std::int64_t>> rows;
    plane_rec(m, rows, out);
    return out;
}

PowerSeries1 macmahon_series(std::int64_t order) {
    if (order < 1) throw std::invalid_argument("macmahon_series needs order >= 1");
    PowerSeries1 prod = PowerSeries1::one(order);
    for (std::int64_t k = 1; k <= order; ++k) {
        const PowerSeries1 factor = PowerSeries1::one(order) - PowerSeries1::monomial(LaurentPoly2(1), k, order);
        prod = prod * pow(factor.inverse(), static_cast<unsigned>(k));
    }
    return prod;
}

LaurentPoly2 goettsche_generating(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("goettsche needs n >= 0");
    if (n == 0) return LaurentPoly2(1);
    PowerSeries1 prod = PowerSeries1::one(n);
    for (std::int64_t k = 1; k <= n; ++k) {
        const PowerSeries1 factor = PowerSeries1::one(n) - PowerSeries1::monomial(q(k + 1), k, n);
        prod = prod * factor.inverse();
    }
    return prod.coeff(n);
}

LaurentPoly2 goettsche_partition_sum(std::int64_t n) {
    LaurentPoly2 sum;
    for (const auto& lambda : partitions(n)) sum += q(n + lambda.length());
    return sum;
}

LaurentPoly2 goettsche_coeff(std::int64_t n) {
    const LaurentPoly2 a = goettsche_generating(n);
    const LaurentPoly2 b = goettsche_partition_sum(n);
    if (a != b)
        throw ConsistencyError("Goettsche routes disagree at n = " + std::to_string(n) + ": " + to_string(a) +
                               " vs " + to_string(b));
    return a;
}

LaurentPoly2 hilb_line(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("hilb_line needs n >= 0");
    return ec(SpaceExpr::affine(n));
}

SpaceExpr lines_in_C3() { return SpaceExpr::fibration(SpaceExpr::proj(2), SpaceExpr::affine(2)); }
SpaceExpr planes_in_C3() { return SpaceExpr::fibration(SpaceExpr::proj(2), SpaceExpr::affine(1)); }
SpaceExpr lines_in_C2() { return SpaceExpr::fibration(SpaceExpr::proj(1), SpaceExpr::affine(1)); }

LaurentPoly2 ec_L4_raw() { return hilb_line(4) * ec(lines_in_C3()); }

LaurentPoly2 ec_L4() { return shift_apply(ec_L4_raw(), kPlanarShift); }

LaurentPoly2 collinear_in_plane() { return hilb_line(4) * ec(lines_in_C2()); }

LaurentPoly2 ec_P4_minus_L4() {
    return shift_apply((goettsche_coeff(4) - collinear_in_plane()) * ec(planes_in_C3()), kPlanarShift);
}

std::string to_string(V4Route r) {
    switch (r) {
        case V4Route::Kuenneth:
            return "kuenneth";
        case V4Route::DualityChain:
            return "duality-chain";
        case V4Route::CorollaryObject:
            return "corollary-object";
    }
    return "?";
}

LaurentPoly2 ec_V4_contribution(V4Route route) {
    const EPair phi = ec_vanishing_cycles_checked();
    const LaurentPoly2 ec_c3 = ec(SpaceExpr::affine(3));
    switch (route) {
        case V4Route::Kuenneth:
            // E_c(C^3 x X, p_2^* phi [3](3)) = (-1)^3 q^{-3} E_c(C^3) E_c(X, phi)
            return shift_apply(twist_apply(ec_c3 * phi.ec, 3), 3);
        case V4Route::DualityChain: {
            // Ordinary E first (E(C^3) = 1), then Phi_4 = phi(Q^H[36])(12) is
            // self-dual up to twist 36 - 2*12 = 12.
            const LaurentPoly2 e = shift_apply(twist_apply(phi.e, 3), 3);
            return self_dual_convert(e, 36 - 2 * 12);
        }
        case V4Route::CorollaryObject:
            return ec_of_object(restricted_phi4_object(), {{"V4", ec_ic_V4().ec}});
    }
    throw std::invalid_argument("unknown V4 route");
}

LaurentPoly2 ec_V4_contribution() {
    const LaurentPoly2 k = ec_V4_contribution(V4Route::Kuenneth);
    for (V4Route r : {V4Route::DualityChain, V4Route::CorollaryObject}) {
        const LaurentPoly2 other = ec_V4_contribution(r);
        if (other != k)
            throw ConsistencyError("V4 routes disagree: kuenneth " + to_string(k) + " vs " + to_string(r) + " " +
                                   to_string(other));
    }
    return k;
}

LaurentPoly2 expected_hilb4_total() {
    return q(6) * LaurentPoly2::from_q({{6, 1}, {5, 1}, {4, 3}, {3, 3}, {2, 3}, {1, 1}, {0, 1}});
}

LaurentPoly2 ec_hilb4_total() {
    const LaurentPoly2 total = ec_V4_contribution() + ec_L4() + ec_P4_minus_L4();
    if (total != expected_hilb4_total())
        throw ConsistencyError("Hilb^4 total " + to_string(total) + " differs from " +
                               to_string(expected_hilb4_total()));
    return total;
}

LaurentPoly2 smooth_fixed_point_constant() {
    return LaurentPoly2::from_q({{12, 1}, {11, 2}, {10, 3}, {9, 1}, {8, 3}, {7, 1}, {6, 1}});
}

LaurentPoly2 singular_fixed_point_residual() {
    const LaurentPoly2 r = ec_hilb4_total() - smooth_fixed_point_constant();
    const LaurentPoly2 expected = LaurentPoly2::from_q({{9, 2}, {11, -1}});
    if (r != expected)
        throw ConsistencyError("singular fixed-point residual " + to_string(r) + " differs from " +
                               to_string(expected));
    return r;
}

std::string to_string(HilbStratum::Label l) {
    switch (l) {
        case HilbStratum::Label::V4:
            return "V4";
        case HilbStratum::Label::L4:
            return "L4";
        case HilbStratum::Label::P4minusL4:
            return "P4minusL4";
        case HilbStratum::Label::S4:
            return "S4";
        case HilbStratum::Label::N4:
            return "N4";
    }
    return "?";
}

std::vector<HilbStratum> hilb4_strata() {
    const SpaceExpr v4 = SpaceExpr::product(SpaceExpr::affine(3), SpaceExpr::cone(SpaceExpr::grass(2, 6)));
    const SpaceExpr l4 = SpaceExpr::fibration(lines_in_C3(), SpaceExpr::affine(4));
    std::vector<HilbStratum> out;
    out.push_back({HilbStratum::Label::V4, v4, to_string(v4), "p_2^*(phi_Pf(Q^H[15]))[3](3)",
                   ec_V4_contribution(), "non-planar subschemes, V_4 = C^3 x X"});
    out.push_back({HilbStratum::Label::L4, l4, to_string(l4), "Q^H[12]", ec_L4(),
                   "collinear subschemes: Hilb^4 of a line over the lines in C^3"});
    out.push_back({HilbStratum::Label::P4minusL4, std::nullopt,
                   "fib(" + to_string(planes_in_C3()) + "; Hilb^4(C^2) \\ collinear)", "Q^H[12]", ec_P4_minus_L4(),
                   "planar non-collinear subschemes: Goettsche value minus collinear, over planes in C^3"});
    return out;
}

}  // namespace pfhilb
