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
 * @file hilbert.hpp
 *
 * E_c of the Hilbert scheme of four points on C^3 with coefficients in the
 * vanishing-cycle module Phi_4, assembled from the stratification
 *
 *   Hilb^4(C^3) = V_4 + L_4 + (P_4 \ L_4)
 *
 * (non-planar, collinear, planar but not collinear), together with the
 * Goettsche numbers of Hilb^n(C^2) and the plane-partition counts that give
 * the numerical DT invariants.
 */

#ifndef PFHILB_HILBERT_HPP
#define PFHILB_HILBERT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfhilb/laurent.hpp"
#include "pfhilb/motivic.hpp"

namespace pfhilb {

/// Weakly decreasing positive parts.
struct Partition {
    std::vector<std::int64_t> parts;

    std::int64_t length() const noexcept { return static_cast<std::int64_t>(parts.size()); }
    std::int64_t weight() const noexcept;
    friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of n, in reverse lexicographic order (n first).
std::vector<Partition> partitions(std::int64_t n);

/// Heights on a Young diagram, weakly decreasing along rows and columns.
/// Rows are stored without trailing zeros.
struct PlanePartition {
    std::vector<std::vector<std::int64_t>> heights;

    std::int64_t weight() const noexcept;
    bool is_valid() const;
    friend bool operator==(const PlanePartition&, const PlanePartition&) = default;
    friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;
};

std::string to_string(const PlanePartition& pp);

inline constexpr std::int64_t kDefaultPlanePartitionCap = 12;

/// Every plane partition of weight m, by depth-first search over rows
/// (each row a partition dominated by the row above). Throws
/// EnumerationCapError if m > cap and std::invalid_argument if m < 0.
std::vector<PlanePartition> plane_partitions(std::int64_t m, std::int64_t cap = kDefaultPlanePartitionCap);

/// prod_{k=1}^{order} (1 - z^k)^{-k} up to z^order; the coefficients are
/// constants. Throws std::invalid_argument if order < 1.
PowerSeries1 macmahon_series(std::int64_t order);

/// Coefficient of z^n in prod_{k>=1} (1 - q^{k+1} z^k)^{-1}.
LaurentPoly2 goettsche_generating(std::int64_t n);
/// sum over partitions of n of q^{n + length}.
LaurentPoly2 goettsche_partition_sum(std::int64_t n);
/// E_c(Hilb^n(C^2)) by both routes; throws ConsistencyError if they differ.
LaurentPoly2 goettsche_coeff(std::int64_t n);

/// E_c(Hilb^n(C^1)) = E_c(C^n) = q^n.
LaurentPoly2 hilb_line(std::int64_t n);

/// Affine lines in C^3: direction in P^2, offset in C^2.
SpaceExpr lines_in_C3();
/// Affine planes in C^3: normal in P^2, offset in C^1.
SpaceExpr planes_in_C3();
/// Affine lines in C^2.
SpaceExpr lines_in_C2();

/// Shift of Phi_4 on the smooth planar locus P_4, where Phi_4 = Q^H[12].
inline constexpr std::int64_t kPlanarShift = 12;

/// E_c(L_4) with constant coefficients, q^4 * E_c(lines in C^3).
LaurentPoly2 ec_L4_raw();
/// Contribution of L_4 with coefficients in Phi_4 = Q^H[12].
LaurentPoly2 ec_L4();
/// Schemes of length 4 on a line in a fixed plane, q^4 * E_c(lines in C^2).
LaurentPoly2 collinear_in_plane();
/// (goettsche(4) - collinear_in_plane()) * E_c(planes in C^3), with sign
/// (-1)^12.
LaurentPoly2 ec_P4_minus_L4();

enum class V4Route { Kuenneth, DualityChain, CorollaryObject };
std::string to_string(V4Route r);

/// E_c(V_4, Phi_4) for Phi_4|V_4 = p_2^*(phi_Pf(Q^H[15]))[3](3) on
/// V_4 = C^3 x X.
LaurentPoly2 ec_V4_contribution(V4Route route);
/// Kuenneth route, cross-checked against the other two; throws
/// ConsistencyError on any disagreement.
LaurentPoly2 ec_V4_contribution();

/// q^6 (q^6 + q^5 + 3q^4 + 3q^3 + 3q^2 + q + 1)
LaurentPoly2 expected_hilb4_total();
/// Sum of the three stratum contributions; throws ConsistencyError if it
/// differs from expected_hilb4_total().
LaurentPoly2 ec_hilb4_total();

/// Contribution of the 12 planar torus-fixed points (localization output).
LaurentPoly2 smooth_fixed_point_constant();
/// ec_hilb4_total() - smooth_fixed_point_constant(); throws
/// ConsistencyError unless it equals 2q^9 - q^11.
LaurentPoly2 singular_fixed_point_residual();

struct HilbStratum {
    enum class Label { V4, L4, P4minusL4, S4, N4 };

    Label label = Label::V4;
    std::optional<SpaceExpr> geometry;
    std::string geometry_text;
    std::string coefficient;  // description of Phi_4 restricted to the stratum
    LaurentPoly2 contribution;
    std::string citation;
};

std::string to_string(HilbStratum::Label l);

/// V_4, L_4 and P_4 \ L_4 with their contributions; they cover Hilb^4(C^3).
std::vector<HilbStratum> hilb4_strata();

}  // namespace pfhilb

#endif  // PFHILB_HILBERT_HPP
