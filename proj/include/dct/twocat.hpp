#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dct/core.hpp"

namespace dct {

struct OneCell {
    Id name;
    Id src;  // zerocell
    Id tgt;

    bool operator==(const OneCell&) const = default;
};

struct TwoCell {
    Id name;
    Id src;  // onecell
    Id tgt;

    bool operator==(const TwoCell&) const = default;
};

/// Strict finite 2-category with explicit composition tables.
///
/// Conventions, fixed once for the whole toolkit:
///   comp1 is keyed (g, f) and stores g∘f (defined when tgt(f)=src(g));
///   vcomp2 is keyed (second, first), first being the cell applied first;
///   hcomp2 is keyed (left, right), left over the 1-cells closer to the
///   composite's source, with the composite 1-cell comp1(right's, left's).
struct Fin2Category {
    Id name;
    std::vector<Id> zerocells;
    std::vector<OneCell> onecells;
    std::map<Id, Id> identity1;  // zerocell -> identity 1-cell
    std::map<std::pair<Id, Id>, Id> comp1;
    std::vector<TwoCell> twocells;
    std::map<Id, Id> identity2;  // onecell -> identity 2-cell
    std::map<std::pair<Id, Id>, Id> vcomp2;
    std::map<std::pair<Id, Id>, Id> hcomp2;

    bool operator==(const Fin2Category&) const = default;

    [[nodiscard]] const OneCell* onecell(const Id& c) const;
    [[nodiscard]] const TwoCell* twocell(const Id& c) const;
    [[nodiscard]] bool is_identity2(const Id& c) const;

    /// 0-cell boundary of a 2-cell (source of its underlying 1-cells).
    [[nodiscard]] const Id& src0_of2(const Id& c) const;
    [[nodiscard]] const Id& tgt0_of2(const Id& c) const;
};

/// A plain category and a strict 2-category sharing one object set.
struct DecoratedTwoCat {
    FinCategory vertical;     // the decoration
    Fin2Category horizontal;  // the 2-category

    bool operator==(const DecoratedTwoCat&) const = default;
};

/// The commutative monoid of 2-cells id_a => id_a at a fixed 0-cell,
/// together with the table identifying its elements with 2-cells of the
/// ambient 2-category (the identity embedding here: elements are 2-cell
/// identifiers).
struct Pi2Fiber {
    Id object;
    FinCommMonoid monoid;
    std::map<Id, Id> embedding;  // monoid element -> 2-cell id

    bool operator==(const Pi2Fiber&) const = default;
};

/// Exhaustive strict-2-category law check: totality of the three tables on
/// exactly the composable pairs, unit laws, associativity, interchange on
/// all composable quadruples, and identity 2-cells closing under hcomp.
[[nodiscard]] ValidationReport validate_two_category(const Fin2Category& b);

/// Extracts the fiber monoid at a 0-cell. Verifies that vertical and
/// horizontal composition agree on the fiber and that the result is
/// commutative; throws EckmannHiltonViolation naming a witness pair if the
/// input tables are inconsistent.
[[nodiscard]] Pi2Fiber pi2(const Fin2Category& b, const Id& a);

/// Empty report iff object sets coincide; otherwise ObjectMismatch listing
/// the symmetric difference.
[[nodiscard]] ValidationReport validate_decoration(const DecoratedTwoCat& d);

}  // namespace dct
