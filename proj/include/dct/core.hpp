#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dct/report.hpp"

namespace dct {

/// Finite commutative monoid given by an element list, a unit, and a dense
/// operation table. Tables store element identifiers; nothing is implicit.
struct FinCommMonoid {
    Id name;
    std::vector<Id> elements;  // ordered; order is part of the data
    Id unit;
    std::vector<std::vector<Id>> op;  // op[i][j] = elements[i] * elements[j]

    bool operator==(const FinCommMonoid&) const = default;

    [[nodiscard]] std::optional<std::size_t> index_of(const Id& e) const {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == e) return i;
        return std::nullopt;
    }

    /// Table lookup. Throws UnknownElement on undeclared arguments.
    [[nodiscard]] const Id& apply(const Id& x, const Id& y) const;
};

/// Monoid homomorphism as an explicit table aligned with source.elements.
struct MonoidHom {
    FinCommMonoid source;
    FinCommMonoid target;
    std::vector<Id> map;  // map[i] = image of source.elements[i]

    bool operator==(const MonoidHom&) const = default;

    [[nodiscard]] const Id& apply(const Id& x) const;
};

struct FinMorphism {
    Id name;
    Id src;
    Id tgt;

    bool operator==(const FinMorphism&) const = default;
};

/// Finite category with explicit identities and a dense composition table
/// over composable pairs. comp is keyed (g, f) and stores g∘f.
struct FinCategory {
    Id name;
    std::vector<Id> objects;
    std::vector<FinMorphism> morphisms;
    std::map<Id, Id> identities;            // object -> identity morphism
    std::map<std::pair<Id, Id>, Id> comp;   // (g, f) -> g∘f when tgt(f)=src(g)

    bool operator==(const FinCategory&) const = default;

    [[nodiscard]] const FinMorphism* morphism(const Id& m) const;
    [[nodiscard]] bool is_identity(const Id& m) const;

    /// Composite g∘f. Throws NotComposable / UnknownMorphism.
    [[nodiscard]] const Id& compose(const Id& g, const Id& f) const;
};

/// Functor between finite categories, stored as explicit object and
/// morphism maps. Source and target are carried by value.
struct CatFunctor {
    FinCategory source;
    FinCategory target;
    std::map<Id, Id> object_map;
    std::map<Id, Id> morphism_map;

    bool operator==(const CatFunctor&) const = default;
};

/// Exhaustively checks totality, unit laws, associativity, and
/// commutativity. Each violated instance is reported with its witnesses.
[[nodiscard]] ValidationReport validate_monoid(const FinCommMonoid& m);

/// Exhaustively checks identities, composability bookkeeping, unit laws,
/// and associativity on every composable triple.
[[nodiscard]] ValidationReport validate_category(const FinCategory& c);

/// Checks that a functor preserves sources, targets, identities, and
/// composites, exhaustively over the source tables.
[[nodiscard]] ValidationReport validate_functor(const CatFunctor& f);

/// Reverses all morphisms: sources and targets swap and the composition
/// table transposes. Involutive.
[[nodiscard]] FinCategory opposite_category(const FinCategory& c);

/// Pointwise composite g∘f of homomorphism tables.
/// Throws Mismatch if target(f) and source(g) are not the same monoid.
[[nodiscard]] MonoidHom compose_homs(const MonoidHom& g, const MonoidHom& f);

[[nodiscard]] MonoidHom identity_hom(const FinCommMonoid& m);

/// Checks map(unit)=unit and map(xy)=map(x)map(y) on all pairs.
[[nodiscard]] ValidationReport validate_hom(const MonoidHom& h);

}  // namespace dct
