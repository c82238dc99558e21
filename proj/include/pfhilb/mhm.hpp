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
 * @file mhm.hpp
 *
 * Formal bookkeeping for mixed Hodge modules of Tate type: composition
 * factors of a weight filtration, cohomology/stalk tables, and the E and E_c
 * polynomials they determine. Nothing here is sheaf theory; the tables are
 * entered as known data and the code checks that the arithmetic closes up.
 *
 * Conventions: Q(k) is the Tate structure of weight -2k, so a group Q(k) in
 * degree j contributes (-1)^j (xy)^{-k}. A shift [s] multiplies E by (-1)^s
 * and raises weights by s.
 */

#ifndef PFHILB_MHM_HPP
#define PFHILB_MHM_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pfhilb/laurent.hpp"
#include "pfhilb/motivic.hpp"

namespace pfhilb {

/// `multiplicity` copies of Q(twist).
struct TateEntry {
    Integer multiplicity = 1;
    std::int64_t twist = 0;

    friend bool operator==(const TateEntry&, const TateEntry&) = default;
};

/// Cohomology groups (or stalks) by degree, each a sum of Tate structures.
class StalkTable {
   public:
    StalkTable() = default;
    /// Throws std::invalid_argument on a non-positive multiplicity.
    explicit StalkTable(std::map<std::int64_t, std::vector<TateEntry>> groups);

    const std::map<std::int64_t, std::vector<TateEntry>>& groups() const noexcept { return groups_; }
    /// Degrees carrying a nonzero group.
    std::vector<std::int64_t> degrees() const;
    Integer total_rank() const;

    /// sum_k (-1)^k sum mult (xy)^{-twist}
    LaurentPoly2 e_poly() const;
    /// Alternating sum of ranks.
    Integer euler() const { return euler_value(e_poly()); }

    /// Reduced cohomology: removes one Q(0) from degree 0. Throws
    /// std::logic_error if there is none.
    StalkTable reduced() const;
    /// Table of T[s]: the group in degree k moves to degree k - s.
    StalkTable shifted(std::int64_t s) const;
    /// Keeps degrees <= k.
    StalkTable truncated_at_most(std::int64_t k) const;

    friend bool operator==(const StalkTable&, const StalkTable&) = default;

   private:
    std::map<std::int64_t, std::vector<TateEntry>> groups_;
};

/// Cohomology of the Pfaffian Milnor fibre F for 6x6 matrices:
/// Q(0), Q(-3), Q(-5), Q(-8) in degrees 0, 5, 9, 14.
StalkTable milnor_fibre_cohomology_n3();
/// Cohomology of U = X \ {0}, the smooth part of the rank <= 2 cone:
/// Q(0), Q(-2), Q(-4), Q(-5), Q(-7), Q(-9) in degrees 0, 4, 8, 9, 13, 17.
StalkTable link_cohomology_U();
/// Stalks at the vertex of the vanishing-cycle module, H^k = H~^{14+k}(F).
StalkTable vanishing_cycle_stalks();
/// Stalks at the vertex of IC_X, H^k = H^{k+9}(U) for k <= -1.
StalkTable ic_stalks();

struct CompFactor {
    enum class Kind { PointModule, ICModule, ConstantModule };

    std::string support;
    Kind kind = Kind::PointModule;
    std::optional<SpaceExpr> space;  // for IC and constant modules
    std::int64_t shift = 0;
    std::int64_t twist = 0;
    std::int64_t weight = 0;

    /// i_* Q^H(twist)[shift], weight shift - 2 twist.
    static CompFactor point(std::string support, std::int64_t twist, std::int64_t weight, std::int64_t shift = 0);
    /// IC^H(twist)[shift] on a space of dimension d, weight d + shift - 2 twist.
    static CompFactor ic(std::string support, SpaceExpr space, std::int64_t twist, std::int64_t weight,
                         std::int64_t shift = 0);
    /// Q^H_S[shift](twist) on a smooth S, weight shift - 2 twist.
    static CompFactor constant(std::string support, SpaceExpr space, std::int64_t shift, std::int64_t twist,
                               std::int64_t weight);

    /// Weight the factor must have given its kind, shift and twist.
    std::int64_t expected_weight() const;
};

std::string to_string(CompFactor::Kind kind);

struct FilteredHodgeObject {
    std::vector<CompFactor> factors;  // strictly increasing weights
    std::int64_t ambient_shift = 0;
    std::vector<std::string> assumptions;

    /// Throws std::invalid_argument if weights are not strictly increasing
    /// or a factor violates its weight rule.
    void validate() const;
    /// The sequence of factor kinds reads the same in both directions.
    bool is_palindromic() const;
    bool has_assumption(const std::string& a) const;
};

inline const std::string kMonodromyTrivial = "monodromy-trivial: phi_{Pf,1} = phi_Pf";
inline const std::string kSelfDual15 = "self-dual: D(phi) = phi(15)";

/// phi_Pf(Q^H[15]) on the cone X: factors i_*Q(-7) (weight 14), IC_X(-3)
/// (weight 15), i_*Q(-8) (weight 16).
FilteredHodgeObject vanishing_cycle_object();

/// Phi_4 restricted to V_4 = C^3 x X: Q_{S4}[3](-4) (weight 11), IC (weight
/// 12), Q_{S4}[3](-5) (weight 13), with S_4 = C^3.
FilteredHodgeObject restricted_phi4_object();

struct EPair {
    LaurentPoly2 e;
    LaurentPoly2 ec;

    friend bool operator==(const EPair&, const EPair&) = default;
};

/// E(X, IC_X) from the vertex stalks, E_c by the n = 9 self-duality.
EPair ec_ic_X();

/// E(V_4, IC) and E_c(V_4, IC) for IC_{V_4} = Q_{C^3}[3] boxtimes IC_X.
EPair ec_ic_V4();

enum class Route { StalkStratum, WeightFiltration };
std::string to_string(Route r);

/// E and E_c of phi_Pf(Q^H[15]) on X. The stalk route reads the Milnor fibre
/// table through the conic structure and dualizes with n = 15; the weight
/// route sums the composition factors of vanishing_cycle_object().
EPair ec_vanishing_cycles(Route route);
/// Both routes; throws ConsistencyError if they differ.
EPair ec_vanishing_cycles_checked();

/// Sum over factors of (-1)^shift (xy)^{-twist} times the base value of the
/// factor: 1 for a point module, base.at(support) for IC modules, and for
/// constant modules base.at(support) if present, else ec(space). Throws
/// std::invalid_argument if an IC factor has no base entry.
LaurentPoly2 ec_of_object(const FilteredHodgeObject& obj, const std::map<std::string, LaurentPoly2>& base);
/// Same sum for ordinary E; every non-point factor needs a base entry.
LaurentPoly2 e_of_object(const FilteredHodgeObject& obj, const std::map<std::string, LaurentPoly2>& base);

/// Shift/twist ledger for Phi_m = phi_{f_m}(Q^H[2m^2 + m])(m^2 - m).
struct TwistLedger {
    std::int64_t m = 0;
    std::int64_t ambient_dim = 0;  // 2m^2 + m
    std::int64_t twist = 0;        // m^2 - m
    std::int64_t hilb_dim = 0;     // 3m
    /// Codimension of the transversal A_1 singularity along the smooth locus
    /// and its twist; the net twist there must vanish.
    std::int64_t a1_codim = 0;
    std::int64_t a1_twist = 0;
    std::int64_t smooth_net_twist = 0;
    // m = 4 only: reduction to the Pfaffian on V_4
    std::optional<std::int64_t> reduction_l;         // pairs of variables removed
    std::optional<std::int64_t> reduced_dim;         // dim Hom(Sym^2 T, T)
    std::optional<std::int64_t> pfaffian_dim;        // dim of Sk(6)
    std::optional<std::int64_t> residual_shift;
    std::optional<std::int64_t> residual_twist;
    std::string residual;  // e.g. "[3](3)"
    std::string description;
};

/// Throws std::invalid_argument for m < 1 and ConsistencyError if the
/// ledger does not close.
TwistLedger twist_bookkeeping_check(std::int64_t m);

nlohmann::json to_json(const FilteredHodgeObject& obj);
nlohmann::json to_json(const TwistLedger& ledger);

}  // namespace pfhilb

#endif  // PFHILB_MHM_HPP
