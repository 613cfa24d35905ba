#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dct/twocat.hpp"

namespace dct {

enum class Variance { Covariant, Contravariant };

[[nodiscard]] inline const char* to_string(Variance v) {
    return v == Variance::Covariant ? "covariant" : "contravariant";
}

/// Assignment of a fiber-monoid homomorphism to every morphism of the
/// decoration. Covariant: action(f: a->b) maps the fiber at a to the fiber
/// at b; contravariant reverses. Identity morphisms carry identity homs.
struct Pi2Indexing {
    Id name;
    DecoratedTwoCat base;
    Variance variance = Variance::Covariant;
    std::map<Id, MonoidHom> action;  // every morphism of base.vertical

    bool operator==(const Pi2Indexing&) const = default;
};

/// Default limit on how many candidate homomorphism tables an enumeration
/// may examine before giving up with SearchBudgetExceeded.
inline constexpr std::uint64_t kDefaultSearchCap = 1'000'000;

/// Checks the fiber condition, the hom laws of every assigned table, the
/// identity condition, and functoriality over every composable pair.
[[nodiscard]] ValidationReport validate_indexing(const Pi2Indexing& phi);

/// All monoid homomorphisms source -> target, in lexicographic order of
/// their image tables (target element order). `examined` accumulates the
/// number of candidate tables generated.
[[nodiscard]] std::vector<MonoidHom> enumerate_monoid_homs(const FinCommMonoid& source,
                                                           const FinCommMonoid& target,
                                                           std::uint64_t* examined = nullptr,
                                                           std::uint64_t cap = kDefaultSearchCap);

/// Exhaustive enumeration of all indexings of the given variance, built
/// morphism-by-morphism in sorted identifier order with composition
/// pruning. Deterministic output order; throws SearchBudgetExceeded if
/// more than `cap` candidate homs are examined.
[[nodiscard]] std::vector<Pi2Indexing> enumerate_indexings(const DecoratedTwoCat& d, Variance variance,
                                                           std::uint64_t cap = kDefaultSearchCap);

/// The stored hom for a morphism of the decoration.
[[nodiscard]] const MonoidHom& action_of(const Pi2Indexing& phi, const Id& f);

}  // namespace dct
