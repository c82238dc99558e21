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

#include "pfhilb/motivic.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfhilb {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

/// Dimension of Sk(2n).
std::int64_t skew_dim(std::int64_t n) { return n * (2 * n - 1); }

}  // namespace

// ---------------------------------------------------------------------------
// SpaceExpr

SpaceExpr SpaceExpr::make(Kind kind, std::vector<std::int64_t> params, std::vector<SpaceExpr> children,
                          bool asserted) {
    return SpaceExpr(std::make_shared<const Node>(Node{kind, std::move(params), std::move(children), asserted}));
}

SpaceExpr SpaceExpr::point() { return make(Kind::Point, {}); }

SpaceExpr SpaceExpr::affine(std::int64_t n) {
    require(n >= 0, "affine(n) needs n >= 0");
    return make(Kind::Affine, {n});
}

SpaceExpr SpaceExpr::torus() { return make(Kind::Torus, {}); }

SpaceExpr SpaceExpr::proj(std::int64_t n) {
    require(n >= 0, "proj(n) needs n >= 0");
    return make(Kind::Proj, {n});
}

SpaceExpr SpaceExpr::grass(std::int64_t k, std::int64_t n) {
    require(n >= 1 && k >= 0 && k <= n, "grass(k,n) needs 0 <= k <= n, n >= 1");
    return make(Kind::Grass, {k, n});
}

SpaceExpr SpaceExpr::gl(std::int64_t m) {
    require(m >= 1, "gl(m) needs m >= 1");
    return make(Kind::GLGroup, {m});
}

SpaceExpr SpaceExpr::sp(std::int64_t two_n) {
    require(two_n >= 2 && two_n % 2 == 0, "sp(2n) needs an even size >= 2");
    return make(Kind::SpGroup, {two_n});
}

SpaceExpr SpaceExpr::homspace(std::int64_t n) {
    require(n >= 1, "homspace(n) needs n >= 1");
    return make(Kind::HomSpaceM, {n});
}

SpaceExpr SpaceExpr::milnor_fibre(std::int64_t n) {
    require(n >= 1, "milnorF(n) needs n >= 1");
    return make(Kind::MilnorFibreF, {n});
}

SpaceExpr SpaceExpr::pfaffian_hypersurface(std::int64_t n) {
    require(n >= 1, "pfaffian(n) needs n >= 1");
    return make(Kind::PfaffianHypersurface, {n});
}

SpaceExpr SpaceExpr::cone(SpaceExpr inner) {
    require(inner.kind() == Kind::Grass || inner.kind() == Kind::Proj, "cone() takes grass(k,n) or proj(n)");
    return make(Kind::Cone, {}, {std::move(inner)});
}

SpaceExpr SpaceExpr::product(SpaceExpr a, SpaceExpr b) { return make(Kind::Product, {}, {std::move(a), std::move(b)}); }

SpaceExpr SpaceExpr::fibration(SpaceExpr base, SpaceExpr fibre) {
    return make(Kind::Fibration, {}, {std::move(base), std::move(fibre)});
}

SpaceExpr SpaceExpr::complement(SpaceExpr whole, SpaceExpr closed, bool inclusion_asserted) {
    return make(Kind::Complement, {}, {std::move(whole), std::move(closed)}, inclusion_asserted);
}

SpaceExpr SpaceExpr::disjoint(std::vector<SpaceExpr> parts) {
    require(parts.size() >= 2, "a disjoint union needs at least two parts");
    return make(Kind::Disjoint, {}, std::move(parts));
}

bool SpaceExpr::is_leaf() const noexcept {
    switch (kind()) {
        case Kind::Product:
        case Kind::Fibration:
        case Kind::Complement:
        case Kind::Disjoint:
            return false;
        default:
            return true;
    }
}

std::int64_t SpaceExpr::dimension() const {
    const auto& p = params();
    switch (kind()) {
        case Kind::Point:
            return 0;
        case Kind::Affine:
        case Kind::Proj:
            return p[0];
        case Kind::Torus:
            return 1;
        case Kind::Grass:
            return p[0] * (p[1] - p[0]);
        case Kind::GLGroup:
            return p[0] * p[0];
        case Kind::SpGroup:
            return (p[0] / 2) * (p[0] + 1);
        case Kind::HomSpaceM:
            return skew_dim(p[0]);
        case Kind::MilnorFibreF:
        case Kind::PfaffianHypersurface:
            return skew_dim(p[0]) - 1;
        case Kind::Cone:
            return children()[0].dimension() + 1;
        case Kind::Product:
        case Kind::Fibration:
            return children()[0].dimension() + children()[1].dimension();
        case Kind::Complement:
            return children()[0].dimension();
        case Kind::Disjoint: {
            std::int64_t d = 0;
            for (const auto& c : children()) d = std::max(d, c.dimension());
            return d;
        }
    }
    return 0;
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
    if (a.node_ == b.node_) return true;
    return a.kind() == b.kind() && a.params() == b.params() && a.inclusion_asserted() == b.inclusion_asserted() &&
           a.children() == b.children();
}

namespace {

// Binding strength: disjoint union < complement < product < atom.
constexpr int kUnionLevel = 1;
constexpr int kDiffLevel = 2;
constexpr int kProdLevel = 3;

int level_of(const SpaceExpr& e) {
    switch (e.kind()) {
        case SpaceExpr::Kind::Disjoint:
            return kUnionLevel;
        case SpaceExpr::Kind::Complement:
            return kDiffLevel;
        case SpaceExpr::Kind::Product:
            return kProdLevel;
        default:
            return 4;
    }
}

std::string print(const SpaceExpr& e, int required) {
    using Kind = SpaceExpr::Kind;
    const auto& p = e.params();
    const auto& c = e.children();
    std::string out;
    switch (e.kind()) {
        case Kind::Point:
            out = "point";
            break;
        case Kind::Affine:
            out = "affine(" + std::to_string(p[0]) + ")";
            break;
        case Kind::Torus:
            out = "torus";
            break;
        case Kind::Proj:
            out = "proj(" + std::to_string(p[0]) + ")";
            break;
        case Kind::Grass:
            out = "grass(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
            break;
        case Kind::GLGroup:
            out = "gl(" + std::to_string(p[0]) + ")";
            break;
        case Kind::SpGroup:
            out = "sp(" + std::to_string(p[0]) + ")";
            break;
        case Kind::HomSpaceM:
            out = "homspace(" + std::to_string(p[0]) + ")";
            break;
        case Kind::MilnorFibreF:
            out = "milnorF(" + std::to_string(p[0]) + ")";
            break;
        case Kind::PfaffianHypersurface:
            out = "pfaffian(" + std::to_string(p[0]) + ")";
            break;
        case Kind::Cone:
            out = "cone(" + print(c[0], 0) + ")";
            break;
        case Kind::Fibration:
            out = "fib(" + print(c[0], 0) + "; " + print(c[1], 0) + ")";
            break;
        case Kind::Product:
            out = print(c[0], kProdLevel) + " * " + print(c[1], kProdLevel + 1);
            break;
        case Kind::Complement:
            out = print(c[0], kDiffLevel) + " \\ " + print(c[1], kDiffLevel + 1);
            break;
        case Kind::Disjoint:
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i > 0) out += " + ";
                out += print(c[i], kUnionLevel + 1);
            }
            break;
    }
    return level_of(e) < required ? "(" + out + ")" : out;
}

}  // namespace

std::string to_string(const SpaceExpr& e) { return print(e, 0); }

// ---------------------------------------------------------------------------
// Kinds and catalog

LaurentPoly2 kind_convert(const LaurentPoly2& p, const EKind& from, const EKind& to) {
    if (from.smooth_dim && to.smooth_dim && *from.smooth_dim != *to.smooth_dim)
        throw std::invalid_argument("kind_convert: conflicting smooth dimensions");
    if (from.flag == to.flag) return p;
    const auto dim = from.smooth_dim ? from.smooth_dim : to.smooth_dim;
    if (!dim) throw std::invalid_argument("kind_convert: E <-> E_c needs a declared smooth dimension");
    return self_dual_convert(p, *dim);
}

LaurentPoly2 catalog_e_GL(std::int64_t m) {
    require(m >= 1, "catalog_e_GL needs m >= 1");
    LaurentPoly2 p(1);
    for (std::int64_t i = 1; i <= m; ++i) p *= LaurentPoly2(1) - LaurentPoly2::q_power(i);
    return p;
}

LaurentPoly2 catalog_e_Sp(std::int64_t n) {
    require(n >= 1, "catalog_e_Sp needs n >= 1");
    LaurentPoly2 p(1);
    for (std::int64_t i = 1; i <= n; ++i) p *= LaurentPoly2(1) - LaurentPoly2::q_power(2 * i);
    return p;
}

LaurentPoly2 catalog_e_M(std::int64_t n) {
    require(n >= 1, "catalog_e_M needs n >= 1");
    LaurentPoly2 p(1);
    for (std::int64_t i = 1; i <= n; ++i) p *= LaurentPoly2(1) - LaurentPoly2::q_power(2 * i - 1);
    return p;
}

LaurentPoly2 catalog_e_F(std::int64_t n) {
    require(n >= 1, "catalog_e_F needs n >= 1");
    LaurentPoly2 p(1);
    for (std::int64_t i = 2; i <= n; ++i) p *= LaurentPoly2(1) - LaurentPoly2::q_power(2 * i - 1);
    return p;
}

BettiPoly catalog_betti_F(std::int64_t n) {
    require(n >= 1, "catalog_betti_F needs n >= 1");
    BettiPoly b = BettiPoly::one();
    for (std::int64_t i = 2; i <= n; ++i) b = b * BettiPoly::one_plus_t(4 * i - 3);
    return b;
}

BettiPoly catalog_betti_M1(std::int64_t n) {
    require(n >= 1, "catalog_betti_M1 needs n >= 1");
    BettiPoly b = BettiPoly::one_plus_t(1);
    for (std::int64_t i = 2; i <= n; ++i) b = b * BettiPoly::one_plus_t(4 * i - 3);
    return b;
}

BettiPoly betti_grassmannian(std::int64_t k, std::int64_t n) {
    require(n >= 1 && k >= 0 && k <= n, "betti_grassmannian needs 0 <= k <= n");
    detail::UniPoly num{{0, 1}}, den{{0, 1}};
    for (std::int64_t i = 1; i <= k; ++i) {
        num = detail::uni_mul(num, {{0, 1}, {2 * (n - k + i), -1}});
        den = detail::uni_mul(den, {{0, 1}, {2 * i, -1}});
    }
    return BettiPoly(detail::uni_divide_exact(std::move(num), den));
}

CatalogEntry catalog_entry(const SpaceExpr& leaf) {
    using Kind = SpaceExpr::Kind;
    const auto& p = leaf.params();
    const std::int64_t dim = leaf.dimension();
    switch (leaf.kind()) {
        case Kind::Point:
            return {LaurentPoly2(1), EKind::compact(0), "point"};
        case Kind::Affine:
            return {LaurentPoly2::q_power(p[0]), EKind::compact(dim), "affine space"};
        case Kind::Torus:
            return {LaurentPoly2::q() - LaurentPoly2(1), EKind::compact(1), "C^* = A^1 minus a point"};
        case Kind::Proj: {
            LaurentPoly2 s;
            for (std::int64_t i = 0; i <= p[0]; ++i) s += LaurentPoly2::q_power(i);
            return {s, EKind::compact(dim), "cell decomposition of projective space"};
        }
        case Kind::Grass:
            return {betti_grassmannian(p[0], p[1]).to_q_poly(), EKind::compact(dim),
                    "Grassmannian Betti polynomial with t^2 = xy"};
        case Kind::GLGroup:
            return {catalog_e_GL(p[0]), EKind::ordinary(dim), "E(GL(m)) = prod (1 - (xy)^i)"};
        case Kind::SpGroup:
            return {catalog_e_Sp(p[0] / 2), EKind::ordinary(dim), "E(Sp(2n)) = prod (1 - (xy)^{2i})"};
        case Kind::HomSpaceM:
            return {catalog_e_M(p[0]), EKind::ordinary(dim), "E(GL(2n)/Sp(2n)) = prod (1 - (xy)^{2i-1})"};
        case Kind::MilnorFibreF:
            return {catalog_e_F(p[0]), EKind::ordinary(dim), "E(F) = prod_{i>=2} (1 - (xy)^{2i-1})"};
        default:
            throw std::invalid_argument("no catalog entry for '" + to_string(leaf) + "'");
    }
}

// ---------------------------------------------------------------------------
// Inclusions

InclusionRegistry InclusionRegistry::builtin() {
    InclusionRegistry r;
    r.structural_ = true;
    return r;
}

void InclusionRegistry::register_inclusion(const SpaceExpr& closed, const SpaceExpr& whole) {
    asserted_.emplace(to_string(closed), to_string(whole));
}

bool InclusionRegistry::contains(const SpaceExpr& closed, const SpaceExpr& whole) const {
    if (asserted_.count({to_string(closed), to_string(whole)}) != 0) return true;
    if (!structural_) return false;
    using Kind = SpaceExpr::Kind;
    if (closed == whole) return true;
    // a closed point of any nonempty variety
    if (closed.kind() == Kind::Point) return true;
    const auto& cp = closed.params();
    const auto& wp = whole.params();
    if (closed.kind() == Kind::Affine && whole.kind() == Kind::Affine) return cp[0] <= wp[0];
    if (closed.kind() == Kind::Proj && whole.kind() == Kind::Proj) return cp[0] <= wp[0];
    if (closed.kind() == Kind::PfaffianHypersurface && whole.kind() == Kind::Affine) return wp[0] == skew_dim(cp[0]);
    if (closed.kind() == Kind::Cone && closed.children()[0].kind() == Kind::Grass) {
        const auto& g = closed.children()[0].params();
        // rank <= 2 skew forms on C^{2n}: the cone over Gr(2, 2n)
        if (g[0] != 2 || g[1] % 2 != 0) return false;
        const std::int64_t n = g[1] / 2;
        if (whole.kind() == Kind::Affine) return wp[0] == skew_dim(n);
        if (whole.kind() == Kind::PfaffianHypersurface) return wp[0] == n && n >= 2;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

LaurentPoly2 eval(const SpaceExpr& e, const InclusionRegistry& reg, EvalStep* step) {
    using Kind = SpaceExpr::Kind;
    EvalStep* child_slot = nullptr;
    auto child = [&](const SpaceExpr& sub) -> LaurentPoly2 {
        if (!step) return eval(sub, reg, nullptr);
        step->children.emplace_back();
        child_slot = &step->children.back();
        return eval(sub, reg, child_slot);
    };

    LaurentPoly2 result;
    std::string rule;
    std::vector<std::string> notes;
    const auto& c = e.children();
    switch (e.kind()) {
        case Kind::Cone: {
            // vertex plus a C^*-bundle over the base
            rule = "cone = vertex + torus * base";
            result = child(SpaceExpr::disjoint({SpaceExpr::point(), SpaceExpr::product(SpaceExpr::torus(), c[0])}));
            break;
        }
        case Kind::PfaffianHypersurface: {
            const std::int64_t n = e.params()[0];
            rule = "Sk(2n) = homspace(n) + pfaffian(n), open/closed";
            result = child(SpaceExpr::affine(skew_dim(n)));
            result -= child(SpaceExpr::homspace(n));
            break;
        }
        case Kind::Product:
            rule = "product";
            result = child(c[0]);
            result *= child(c[1]);
            break;
        case Kind::Fibration:
            rule = "Zariski locally trivial fibration";
            notes.push_back("local triviality asserted for fib(" + to_string(c[0]) + "; " + to_string(c[1]) + ")");
            result = child(c[0]);
            result *= child(c[1]);
            break;
        case Kind::Complement: {
            if (!e.inclusion_asserted() && !reg.contains(c[1], c[0]))
                throw std::invalid_argument("no registered closed inclusion " + to_string(c[1]) + " -> " +
                                            to_string(c[0]));
            rule = "additivity over closed/open decomposition";
            notes.push_back(e.inclusion_asserted() ? "inclusion asserted in expression" : "inclusion from registry");
            result = child(c[0]);
            result -= child(c[1]);
            break;
        }
        case Kind::Disjoint:
            rule = "disjoint union";
            for (const auto& part : c) result += child(part);
            break;
        default: {
            const CatalogEntry entry = catalog_entry(e);
            result = kind_convert(entry.poly, entry.kind, EKind::compact(entry.kind.smooth_dim));
            rule = "catalog";
            notes.push_back(entry.citation);
            if (entry.kind.flag == EKind::Flag::Ordinary)
                notes.push_back("converted from E via smooth dimension " + std::to_string(*entry.kind.smooth_dim));
            break;
        }
    }
    if (step) {
        step->expr = to_string(e);
        step->rule = std::move(rule);
        step->result = result;
        step->notes = std::move(notes);
    }
    return result;
}

}  // namespace

LaurentPoly2 ec(const SpaceExpr& space, const InclusionRegistry& registry, EvalStep* trace) {
    if (trace) *trace = EvalStep{};
    return eval(space, registry, trace);
}

LaurentPoly2 ec(const SpaceExpr& space) { return ec(space, InclusionRegistry::builtin(), nullptr); }

}  // namespace pfhilb
