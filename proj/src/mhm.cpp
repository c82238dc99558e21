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

#include "pfhilb/mhm.hpp"

#include <algorithm>
#include <stdexcept>

#include "pfhilb/errors.hpp"

namespace pfhilb {

namespace {

LaurentPoly2 sign_twist(std::int64_t shift, std::int64_t twist) {
    return shift_apply(twist_apply(LaurentPoly2(1), twist), shift);
}

const SpaceExpr& cone_X() {
    static const SpaceExpr x = SpaceExpr::cone(SpaceExpr::grass(2, 6));
    return x;
}

}  // namespace

StalkTable::StalkTable(std::map<std::int64_t, std::vector<TateEntry>> groups) : groups_(std::move(groups)) {
    for (auto it = groups_.begin(); it != groups_.end();) {
        for (const auto& e : it->second)
            if (e.multiplicity <= 0) throw std::invalid_argument("stalk multiplicities must be positive");
        it = it->second.empty() ? groups_.erase(it) : std::next(it);
    }
}

std::vector<std::int64_t> StalkTable::degrees() const {
    std::vector<std::int64_t> out;
    for (const auto& [k, _] : groups_) out.push_back(k);
    return out;
}

Integer StalkTable::total_rank() const {
    Integer sum = 0;
    for (const auto& [_, entries] : groups_)
        for (const auto& e : entries) sum += e.multiplicity;
    return sum;
}

LaurentPoly2 StalkTable::e_poly() const {
    LaurentPoly2 out;
    for (const auto& [k, entries] : groups_)
        for (const auto& e : entries) out += LaurentPoly2(e.multiplicity) * sign_twist(k, e.twist);
    return out;
}

StalkTable StalkTable::reduced() const {
    auto groups = groups_;
    auto it = groups.find(0);
    if (it == groups.end()) throw std::logic_error("no degree-0 group to reduce");
    auto& entries = it->second;
    auto q0 = std::find_if(entries.begin(), entries.end(), [](const TateEntry& e) { return e.twist == 0; });
    if (q0 == entries.end()) throw std::logic_error("degree-0 group has no Q(0) summand");
    if (--q0->multiplicity == 0) entries.erase(q0);
    return StalkTable(std::move(groups));
}

StalkTable StalkTable::shifted(std::int64_t s) const {
    std::map<std::int64_t, std::vector<TateEntry>> groups;
    for (const auto& [k, entries] : groups_) groups.emplace(k - s, entries);
    return StalkTable(std::move(groups));
}

StalkTable StalkTable::truncated_at_most(std::int64_t k) const {
    std::map<std::int64_t, std::vector<TateEntry>> groups;
    for (const auto& [d, entries] : groups_)
        if (d <= k) groups.emplace(d, entries);
    return StalkTable(std::move(groups));
}

StalkTable milnor_fibre_cohomology_n3() {
    return StalkTable({{0, {{1, 0}}}, {5, {{1, -3}}}, {9, {{1, -5}}}, {14, {{1, -8}}}});
}

StalkTable link_cohomology_U() {
    return StalkTable({{0, {{1, 0}}}, {4, {{1, -2}}}, {8, {{1, -4}}}, {9, {{1, -5}}}, {13, {{1, -7}}}, {17, {{1, -9}}}});
}

StalkTable vanishing_cycle_stalks() { return milnor_fibre_cohomology_n3().reduced().shifted(14); }

StalkTable ic_stalks() { return link_cohomology_U().shifted(9).truncated_at_most(-1); }

CompFactor CompFactor::point(std::string support, std::int64_t twist, std::int64_t weight, std::int64_t shift) {
    CompFactor f{std::move(support), Kind::PointModule, std::nullopt, shift, twist, weight};
    if (f.expected_weight() != weight) throw std::invalid_argument("point module weight must be shift - 2*twist");
    return f;
}

CompFactor CompFactor::ic(std::string support, SpaceExpr space, std::int64_t twist, std::int64_t weight,
                          std::int64_t shift) {
    CompFactor f{std::move(support), Kind::ICModule, std::move(space), shift, twist, weight};
    if (f.expected_weight() != weight) throw std::invalid_argument("IC module weight must be dim + shift - 2*twist");
    return f;
}

CompFactor CompFactor::constant(std::string support, SpaceExpr space, std::int64_t shift, std::int64_t twist,
                                std::int64_t weight) {
    CompFactor f{std::move(support), Kind::ConstantModule, std::move(space), shift, twist, weight};
    if (f.expected_weight() != weight)
        throw std::invalid_argument("constant module weight must be shift - 2*twist");
    return f;
}

std::int64_t CompFactor::expected_weight() const {
    const std::int64_t base = kind == Kind::ICModule ? space.value().dimension() : 0;
    return base + shift - 2 * twist;
}

std::string to_string(CompFactor::Kind kind) {
    switch (kind) {
        case CompFactor::Kind::PointModule:
            return "PointModule";
        case CompFactor::Kind::ICModule:
            return "ICModule";
        case CompFactor::Kind::ConstantModule:
            return "ConstantModule";
    }
    return "?";
}

void FilteredHodgeObject::validate() const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].expected_weight() != factors[i].weight)
            throw std::invalid_argument("factor " + std::to_string(i) + " violates its weight rule");
        if (i > 0 && factors[i].weight <= factors[i - 1].weight)
            throw std::invalid_argument("factor weights must be strictly increasing");
    }
}

bool FilteredHodgeObject::is_palindromic() const {
    return std::equal(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(factors.size() / 2),
                      factors.rbegin(), [](const CompFactor& a, const CompFactor& b) { return a.kind == b.kind; });
}

bool FilteredHodgeObject::has_assumption(const std::string& a) const {
    return std::find(assumptions.begin(), assumptions.end(), a) != assumptions.end();
}

FilteredHodgeObject vanishing_cycle_object() {
    FilteredHodgeObject obj;
    obj.factors = {CompFactor::point("origin", -7, 14), CompFactor::ic("X", cone_X(), -3, 15),
                   CompFactor::point("origin", -8, 16)};
    obj.ambient_shift = 15;
    obj.assumptions = {kMonodromyTrivial, kSelfDual15};
    obj.validate();
    return obj;
}

FilteredHodgeObject restricted_phi4_object() {
    const SpaceExpr s4 = SpaceExpr::affine(3);
    const SpaceExpr v4 = SpaceExpr::product(s4, cone_X());
    FilteredHodgeObject obj;
    obj.factors = {CompFactor::constant("S4", s4, 3, -4, 11), CompFactor::ic("V4", v4, 0, 12),
                   CompFactor::constant("S4", s4, 3, -5, 13)};
    obj.ambient_shift = 36;
    obj.assumptions = {kMonodromyTrivial};
    obj.validate();
    return obj;
}

EPair ec_ic_X() {
    const LaurentPoly2 e = ic_stalks().e_poly();
    return {e, self_dual_convert(e, 9)};
}

EPair ec_ic_V4() {
    // Q_{C^3}[3] boxtimes IC_X: E(C^3) = 1, E_c(C^3) = q^3, sign (-1)^3.
    const EPair x = ec_ic_X();
    return {shift_apply(x.e, 3), shift_apply(LaurentPoly2::q_power(3) * x.ec, 3)};
}

std::string to_string(Route r) {
    return r == Route::StalkStratum ? "stalk-stratum" : "weight-filtration";
}

EPair ec_vanishing_cycles(Route route) {
    const FilteredHodgeObject obj = vanishing_cycle_object();
    if (route == Route::StalkStratum) {
        if (!obj.has_assumption(kMonodromyTrivial))
            throw std::logic_error("n = 15 self-duality needs trivial monodromy");
        // conic structure: hypercohomology on X is the stalk at the vertex
        const LaurentPoly2 e = vanishing_cycle_stalks().e_poly();
        return {e, self_dual_convert(e, 15)};
    }
    const EPair ic = ec_ic_X();
    return {e_of_object(obj, {{"X", ic.e}}), ec_of_object(obj, {{"X", ic.ec}})};
}

EPair ec_vanishing_cycles_checked() {
    const EPair a = ec_vanishing_cycles(Route::StalkStratum);
    const EPair b = ec_vanishing_cycles(Route::WeightFiltration);
    if (!(a == b))
        throw ConsistencyError("vanishing-cycle routes disagree: E " + to_string(a.e) + " vs " + to_string(b.e) +
                               ", E_c " + to_string(a.ec) + " vs " + to_string(b.ec));
    return a;
}

LaurentPoly2 ec_of_object(const FilteredHodgeObject& obj, const std::map<std::string, LaurentPoly2>& base) {
    LaurentPoly2 sum;
    for (const auto& f : obj.factors) {
        LaurentPoly2 value(1);
        if (f.kind != CompFactor::Kind::PointModule) {
            auto it = base.find(f.support);
            if (it != base.end())
                value = it->second;
            else if (f.kind == CompFactor::Kind::ConstantModule)
                value = ec(*f.space);
            else
                throw std::invalid_argument("no base E_c entry for support " + f.support);
        }
        sum += sign_twist(f.shift, f.twist) * value;
    }
    return sum;
}

LaurentPoly2 e_of_object(const FilteredHodgeObject& obj, const std::map<std::string, LaurentPoly2>& base) {
    LaurentPoly2 sum;
    for (const auto& f : obj.factors) {
        LaurentPoly2 value(1);
        if (f.kind != CompFactor::Kind::PointModule) {
            auto it = base.find(f.support);
            if (it == base.end()) throw std::invalid_argument("no base E entry for support " + f.support);
            value = it->second;
        }
        sum += sign_twist(f.shift, f.twist) * value;
    }
    return sum;
}

TwistLedger twist_bookkeeping_check(std::int64_t m) {
    if (m < 1) throw std::invalid_argument("twist bookkeeping needs m >= 1");
    TwistLedger l;
    l.m = m;
    l.ambient_dim = 2 * m * m + m;
    l.twist = m * m - m;
    l.hilb_dim = 3 * m;
    // Along the smooth locus the critical locus is a transversal A_1 of
    // codimension 2m^2 - 2m; each pair of variables contributes twist -1.
    l.a1_codim = l.ambient_dim - l.hilb_dim;
    if (l.a1_codim % 2 != 0) throw ConsistencyError("A_1 codimension must be even");
    l.a1_twist = -(l.a1_codim / 2);
    l.smooth_net_twist = l.twist + l.a1_twist;
    if (l.smooth_net_twist != 0) throw ConsistencyError("twist does not cancel on the smooth locus");

    if (m == 4) {
        // M_4 embeds in Hom(T (x) T, 1 (+) T) with dim T = 3; the quadratic
        // part reduces it to Hom(Sym^2 T, T) = C^3 x Sk(6).
        const std::int64_t embedding = 3 * 3 * (1 + 3);
        const std::int64_t reduced = 6 * 3;
        const std::int64_t sk6 = 6 * 5 / 2;
        if (embedding != l.ambient_dim) throw ConsistencyError("embedding dimension differs from dim M_4");
        l.reduction_l = (l.ambient_dim - reduced) / 2;
        l.reduced_dim = reduced;
        l.pfaffian_dim = sk6;
        l.residual_shift = reduced - sk6;
        l.residual_twist = l.twist - *l.reduction_l;
        if (2 * *l.reduction_l + reduced != l.ambient_dim || *l.residual_shift != 3 || *l.residual_twist != 3)
            throw ConsistencyError("m = 4 reduction ledger does not close");
        l.residual = "[" + std::to_string(*l.residual_shift) + "](" + std::to_string(*l.residual_twist) + ")";
        l.description = "Phi_4|V_4 = p_2^*(phi_Pf(Q^H[15]))" + l.residual + " on C^3 x X";
    } else if (m <= 3) {
        l.description = "Phi_" + std::to_string(m) + " = Q^H[" + std::to_string(l.hilb_dim) + "] on a smooth " +
                        std::to_string(l.hilb_dim) + "-dimensional scheme";
    } else {
        l.description = "Phi_" + std::to_string(m) + " on the smooth locus: Q^H[" + std::to_string(l.hilb_dim) + "]";
    }
    return l;
}

nlohmann::json to_json(const FilteredHodgeObject& obj) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto& f : obj.factors) {
        nlohmann::json j = {{"support", f.support},
                            {"kind", to_string(f.kind)},
                            {"shift", f.shift},
                            {"twist", f.twist},
                            {"weight", f.weight}};
        if (f.space) j["space"] = to_string(*f.space);
        factors.push_back(std::move(j));
    }
    return {{"factors", factors}, {"ambient_shift", obj.ambient_shift}, {"assumptions", obj.assumptions}};
}

nlohmann::json to_json(const TwistLedger& l) {
    nlohmann::json j = {{"m", l.m},
                        {"dim", l.ambient_dim},
                        {"twist", l.twist},
                        {"hilb_dim", l.hilb_dim},
                        {"a1_codim", l.a1_codim},
                        {"a1_twist", l.a1_twist},
                        {"smooth_net_twist", l.smooth_net_twist},
                        {"description", l.description}};
    if (l.reduction_l) {
        j["reduction_l"] = *l.reduction_l;
        j["reduced_dim"] = *l.reduced_dim;
        j["pfaffian_dim"] = *l.pfaffian_dim;
        j["residual"] = l.residual;
    }
    return j;
}

}  // namespace pfhilb
