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
 * @file motivic.hpp
 *
 * Scissor calculus for compactly supported E-polynomials. A SpaceExpr is an
 * immutable tree of catalog spaces combined by products, Zariski locally
 * trivial fibrations, complements of closed subvarieties and disjoint unions;
 * ec() evaluates it by structural recursion:
 *
 *   E_c(A x B) = E_c(A) E_c(B)          E_c(fibration) = E_c(base) E_c(fibre)
 *   E_c(V \ Z) = E_c(V) - E_c(Z)        E_c(A + B)     = E_c(A) + E_c(B)
 *
 * Catalog leaves keep the kind (E or E_c) in which their closed form is
 * known; ordinary E values are converted at the leaf through the smooth
 * dimension, E_c(x, y) = (xy)^d E(1/x, 1/y).
 */

#ifndef PFHILB_MOTIVIC_HPP
#define PFHILB_MOTIVIC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pfhilb/laurent.hpp"

namespace pfhilb {

class SpaceExpr {
   public:
    enum class Kind {
        Point,
        Affine,
        Torus,
        Proj,
        Grass,
        GLGroup,
        SpGroup,
        HomSpaceM,
        MilnorFibreF,
        PfaffianHypersurface,
        Cone,
        Product,
        Fibration,
        Complement,
        Disjoint,
    };

    // Leaves. Parameter checks throw std::invalid_argument.
    static SpaceExpr point();
    static SpaceExpr affine(std::int64_t n);
    static SpaceExpr torus();
    static SpaceExpr proj(std::int64_t n);
    static SpaceExpr grass(std::int64_t k, std::int64_t n);
    static SpaceExpr gl(std::int64_t m);
    /// Sp(2n), given the matrix size 2n.
    static SpaceExpr sp(std::int64_t two_n);
    /// M = GL(2n)/Sp(2n), the complement of the Pfaffian hypersurface.
    static SpaceExpr homspace(std::int64_t n);
    /// F = Pf^{-1}(1) in Sk(2n).
    static SpaceExpr milnor_fibre(std::int64_t n);
    /// Z = {Pf = 0} in Sk(2n).
    static SpaceExpr pfaffian_hypersurface(std::int64_t n);
    /// Affine cone over a projective leaf (a Grassmannian in its Pluecker
    /// embedding, or a projective space).
    static SpaceExpr cone(SpaceExpr inner);

    // Combinators.
    static SpaceExpr product(SpaceExpr a, SpaceExpr b);
    /// Total space of a Zariski locally trivial fibration; local triviality
    /// is asserted by whoever builds the node.
    static SpaceExpr fibration(SpaceExpr base, SpaceExpr fibre);
    /// whole \ closed. The closed inclusion must be asserted here or known to
    /// the InclusionRegistry used at evaluation time.
    static SpaceExpr complement(SpaceExpr whole, SpaceExpr closed, bool inclusion_asserted = false);
    static SpaceExpr disjoint(std::vector<SpaceExpr> parts);

    Kind kind() const noexcept { return node_->kind; }
    const std::vector<std::int64_t>& params() const noexcept { return node_->params; }
    const std::vector<SpaceExpr>& children() const noexcept { return node_->children; }
    bool inclusion_asserted() const noexcept { return node_->inclusion_asserted; }
    bool is_leaf() const noexcept;

    /// Complex dimension; products and fibrations add, unions take the max.
    std::int64_t dimension() const;

    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);

   private:
    struct Node {
        Kind kind;
        std::vector<std::int64_t> params;
        std::vector<SpaceExpr> children;
        bool inclusion_asserted = false;
    };

    explicit SpaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static SpaceExpr make(Kind kind, std::vector<std::int64_t> params, std::vector<SpaceExpr> children = {},
                          bool asserted = false);

    std::shared_ptr<const Node> node_;
};

/// Canonical text in the space grammar, e.g. "affine(3) * cone(grass(2,6))".
std::string to_string(const SpaceExpr& e);

/// Whether an E-polynomial is ordinary (E) or compactly supported (E_c),
/// with the smooth dimension needed to convert between the two.
struct EKind {
    enum class Flag { Ordinary, Compact };

    Flag flag = Flag::Compact;
    std::optional<std::int64_t> smooth_dim;

    static EKind ordinary(std::optional<std::int64_t> dim = std::nullopt) { return {Flag::Ordinary, dim}; }
    static EKind compact(std::optional<std::int64_t> dim = std::nullopt) { return {Flag::Compact, dim}; }
};

/// Converts between E and E_c of a smooth variety via (xy)^d p(1/x, 1/y).
/// Throws std::invalid_argument if neither side declares a dimension, or if
/// the two declared dimensions differ.
LaurentPoly2 kind_convert(const LaurentPoly2& p, const EKind& from, const EKind& to);

/// A closed-form value as the literature states it.
struct CatalogEntry {
    LaurentPoly2 poly;
    EKind kind;
    std::string citation;
};

/// Catalog value of a leaf. Throws std::invalid_argument for combinators and
/// for leaves that are derived (cone, Pfaffian hypersurface).
CatalogEntry catalog_entry(const SpaceExpr& leaf);

/// E(GL(m)) = prod_{i=1}^{m} (1 - (xy)^i).
LaurentPoly2 catalog_e_GL(std::int64_t m);
/// E(Sp(2n)) = prod_{i=1}^{n} (1 - (xy)^{2i}); the argument is n.
LaurentPoly2 catalog_e_Sp(std::int64_t n);
/// E(GL(2n)/Sp(2n)) = prod_{i=1}^{n} (1 - (xy)^{2i-1}).
LaurentPoly2 catalog_e_M(std::int64_t n);
/// E(F) = prod_{i=2}^{n} (1 - (xy)^{2i-1}) for the Pfaffian Milnor fibre.
LaurentPoly2 catalog_e_F(std::int64_t n);
/// B(F, t) = (1 + t^5)(1 + t^9)...(1 + t^{4n-3}).
BettiPoly catalog_betti_F(std::int64_t n);
/// B(U(2n)/Q(n), t) = (1 + t)(1 + t^5)...(1 + t^{4n-3}).
BettiPoly catalog_betti_M1(std::int64_t n);
/// B(Gr(k, n), t) = prod_{i=1}^{k} (1 - t^{2(n-k+i)}) / (1 - t^{2i}), by
/// exact division.
BettiPoly betti_grassmannian(std::int64_t k, std::int64_t n);

/// Known closed inclusions Z -> V used by complements.
class InclusionRegistry {
   public:
    /// Registry with the structural inclusions (point in anything, linear
    /// subspaces, Pfaffian hypersurface in Sk(2n), rank <= 2 cone in it).
    static InclusionRegistry builtin();

    void register_inclusion(const SpaceExpr& closed, const SpaceExpr& whole);
    bool contains(const SpaceExpr& closed, const SpaceExpr& whole) const;

   private:
    bool structural_ = false;
    std::set<std::pair<std::string, std::string>> asserted_;
};

/// One node of an evaluation derivation.
struct EvalStep {
    std::string expr;
    std::string rule;
    LaurentPoly2 result;
    std::vector<std::string> notes;
    std::vector<EvalStep> children;
};

/// E_c by structural recursion. Throws std::invalid_argument for a
/// complement whose inclusion is neither asserted nor registered.
LaurentPoly2 ec(const SpaceExpr& space, const InclusionRegistry& registry, EvalStep* trace = nullptr);
LaurentPoly2 ec(const SpaceExpr& space);

}  // namespace pfhilb

#endif  // PFHILB_MOTIVIC_HPP
