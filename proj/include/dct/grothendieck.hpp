#pragma once

#include <map>
#include <utility>

#include "dct/indexing.hpp"

namespace dct {

/// The category of pairs (frame, fiber element) with twisted composition.
/// Covariant: the fiber element lives over the frame's target and
///   (g,x) after (f,y) = (g∘f, x ⊟ action(g)(y)).
/// Contravariant: the element lives over the source and
///   (g,x) after (f,y) = (g∘f, action(f)(x) ⊟ y).
/// Morphism names are rendered "(frame,element)".
struct Grothendieck {
    FinCategory category;
    std::map<Id, std::pair<Id, Id>> parts;  // morphism name -> (frame, element)

    bool operator==(const Grothendieck&) const = default;
};

[[nodiscard]] Grothendieck build_grothendieck(const Pi2Indexing& phi);

/// The fiber functor sending (f,x) to f. Composed with the unit section it
/// is the identity on the decoration.
[[nodiscard]] CatFunctor projection(const Grothendieck& g, const Pi2Indexing& phi);

/// The faithful section f -> (f, unit of the appropriate fiber).
[[nodiscard]] CatFunctor unit_section(const Grothendieck& g, const Pi2Indexing& phi);

/// The faithful inclusion of the fiber monoid at an object, from its
/// one-object category, sending x to (id, x).
[[nodiscard]] CatFunctor fiber_inclusion(const Grothendieck& g, const Pi2Indexing& phi, const Id& object);

/// One-object category whose morphisms are the monoid's elements.
[[nodiscard]] FinCategory delooping_category(const FinCommMonoid& m, const Id& object);

}  // namespace dct
