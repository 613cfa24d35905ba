#pragma once

#include <vector>

#include "dct/twocat.hpp"

namespace dct {

/// One layer of a vertical word: a globular 2-cell of the 2-category or
/// the unit atom of a decoration morphism.
struct FreeLayer {
    enum class Kind { Globular, Unit };
    Kind kind = Kind::Globular;
    Id ref;

    bool operator==(const FreeLayer&) const = default;

    [[nodiscard]] std::string render() const {
        return kind == Kind::Globular ? ref : "U_" + ref;
    }
};

/// A vertical word over globular and unit atoms, listed top to bottom.
/// Unit atoms of identity morphisms are stored as the corresponding
/// identity 2-cells.
struct FreeWord {
    std::vector<FreeLayer> layers;

    bool operator==(const FreeWord&) const = default;
};

/// Builds a word from atom names; a name of the form U_<morphism> is a
/// unit atom, anything else must name a 2-cell. Throws IllFormedWord on
/// unknown atoms or non-composable adjacent layers.
[[nodiscard]] FreeWord make_word(const DecoratedTwoCat& d, const std::vector<std::string>& atoms);

/// Top and bottom boundary 1-cells of a word.
[[nodiscard]] std::pair<Id, Id> word_boundary(const DecoratedTwoCat& d, const FreeWord& w);

/// Composite frame of a word, as a decoration morphism.
[[nodiscard]] Id word_frame(const DecoratedTwoCat& d, const FreeWord& w);

/// Merges adjacent globular layers, merges adjacent unit layers, and
/// drops identity layers absorbed by a neighbour, until no rule applies.
/// Idempotent; preserves frame and boundary.
[[nodiscard]] FreeWord normalize_word(const DecoratedTwoCat& d, const FreeWord& w);

/// Minimal number of atoms over all words of length at most `budget`
/// equal to w under the merge congruence, found by exhaustive search over
/// the atom alphabet. Throws BudgetTooSmall if the budget cannot even
/// accommodate the normal form of w.
[[nodiscard]] std::size_t min_factorization_length(const DecoratedTwoCat& d, const FreeWord& w, std::size_t budget);

}  // namespace dct
