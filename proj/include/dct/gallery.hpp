#pragma once

#include <json.hpp>
#include <optional>

#include "dct/crossprod.hpp"
#include "dct/dsl.hpp"

namespace dct {

/// One verified claim: the operation that produced the result and whether
/// it came out as expected.
struct Verdict {
    std::string claim;
    std::string op;
    std::string result;
    bool pass = false;

    bool operator==(const Verdict&) const = default;
};

struct GalleryResult {
    Id name;
    Workspace workspace;
    std::vector<std::pair<Id, DoubleCatModel>> models;  // label -> model
    std::vector<Verdict> verdicts;

    [[nodiscard]] bool ok() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }

    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] nlohmann::ordered_json to_json() const;
};

/// Delooping category of an abelian group table: one object, the unit
/// renamed to the auto identity of the object.
[[nodiscard]] FinCategory group_delooping(const FinCommMonoid& g, const Id& object);

/// One-object 2-category whose fiber monoid at the object is the given
/// commutative monoid, unit renamed to the identity 2-cell.
[[nodiscard]] Fin2Category monoid_two_delooping(const FinCommMonoid& a, const Id& object);

/// Delooping of the semidirect product built directly from the action:
/// morphisms "a.g", (b,h) after (a,g) = (b + act_h(a), h*g). This is the
/// independent oracle the crossed product is compared against.
[[nodiscard]] FinCategory semidirect_delooping(const FinCommMonoid& a, const FinCommMonoid& g,
                                               const std::map<Id, MonoidHom>& action, const Id& object);

/// Searches for a composition-preserving bijection between two one-object
/// categories with equally many morphisms. Deterministic first match.
[[nodiscard]] std::optional<std::map<Id, Id>> find_category_isomorphism(const FinCategory& c1,
                                                                        const FinCategory& c2);

/// Builds the crossed product of the group action instance and verifies
/// its morphism category against the directly constructed semidirect
/// product. Throws NotAGroup / NotAnAction on bad input.
[[nodiscard]] GalleryResult semidirect_example(const FinCommMonoid& g, const FinCommMonoid& a,
                                               const std::map<Id, MonoidHom>& action,
                                               const Id& indexing_name = "Act");

/// The two-object instance with non-isomorphic fibers: no indexings or
/// opindexings exist; repairing the fiber brings one back.
[[nodiscard]] GalleryResult no_indexing_example();

/// Several objects and 1-cells, all fibers trivial: a unique indexing and
/// opindexing, a crossed product with singleton orbits, length 1.
[[nodiscard]] GalleryResult trivial_pi2_example();

/// The chain instance with fibers Z/2, Z/2, trivial: the designated word
/// needs four atoms in the free structure, while every crossed-product
/// square decomposes into at most three.
[[nodiscard]] GalleryResult free_length4_example();

[[nodiscard]] std::vector<std::string> gallery_names();

/// Runs a named gallery instance end to end. Throws UnknownExample.
[[nodiscard]] GalleryResult run_example(const std::string& name);

}  // namespace dct
