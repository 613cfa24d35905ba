#include <doctest.h>

#include <set>

#include "dct/grothendieck.hpp"
#include "fixtures.hpp"

using namespace dct;
using namespace dct::testing;

namespace {

Pi2Indexing negation_indexing() { return z2_on_z3_workspace().indexing("Act"); }

}  // namespace

TEST_CASE("the Grothendieck category of the negation indexing validates") {
    Grothendieck g = build_grothendieck(negation_indexing());
    CHECK(validate_category(g.category).ok());
    CHECK(g.category.morphisms.size() == 6);
}

TEST_CASE("twisted composition applies the action to the earlier fiber element") {
    Grothendieck g = build_grothendieck(negation_indexing());
    // (g,1) after (g,2): frame g*g = id, element 1 + neg(2) = 1 + 1 = 2
    CHECK(g.category.comp.at({"(g,1)", "(g,2)"}) == "(id_pt,2)");
    // identity frames compose fiberwise
    CHECK(g.category.comp.at({"(id_pt,1)", "(id_pt,2)"}) == "(id_pt,id_id_pt)");
    // the sliding identity: (g,unit) after (id,phi) twists phi through the action
    CHECK(g.category.comp.at({"(g,id_id_pt)", "(id_pt,1)"}) == "(g,2)");
}

TEST_CASE("morphism count is the sum of target fiber sizes") {
    for (const auto& ws : {z2_on_z3_workspace(), free_length4_example().workspace}) {
        for (const auto& [iname, decl] : ws.indexings) {
            Pi2Indexing phi = ws.indexing(iname);
            Grothendieck g = build_grothendieck(phi);
            std::size_t expected = 0;
            for (const auto& f : phi.base.vertical.morphisms) {
                Id home = phi.variance == Variance::Covariant ? f.tgt : f.src;
                expected += pi2(phi.base.horizontal, home).monoid.elements.size();
            }
            CHECK(g.category.morphisms.size() == expected);
            CHECK(validate_category(g.category).ok());
        }
    }
}

TEST_CASE("projection is a functor and unit_section is its section") {
    Pi2Indexing phi = negation_indexing();
    Grothendieck g = build_grothendieck(phi);
    CatFunctor P = projection(g, phi);
    CatFunctor U = unit_section(g, phi);
    CHECK(validate_functor(P).ok());
    CHECK(validate_functor(U).ok());
    CHECK(P.morphism_map.at("(g,2)") == "g");
    for (const auto& f : phi.base.vertical.morphisms) CHECK(P.morphism_map.at(U.morphism_map.at(f.name)) == f.name);
    // faithful: distinct morphisms have distinct unit images
    std::set<Id> images;
    for (const auto& [mor, img] : U.morphism_map) images.insert(img);
    CHECK(images.size() == U.morphism_map.size());
}

TEST_CASE("unit section composes to units") {
    Pi2Indexing phi = negation_indexing();
    Grothendieck g = build_grothendieck(phi);
    CatFunctor U = unit_section(g, phi);
    CHECK(g.category.comp.at({U.morphism_map.at("g"), U.morphism_map.at("g")}) == U.morphism_map.at("id_pt"));
}

TEST_CASE("fiber inclusions are faithful functors that respect composition") {
    Pi2Indexing phi = negation_indexing();
    Grothendieck g = build_grothendieck(phi);
    CatFunctor inc = fiber_inclusion(g, phi, "pt");
    CHECK(validate_functor(inc).ok());
    CHECK(inc.morphism_map.at("1") == "(id_pt,1)");
    CHECK(g.category.comp.at({"(id_pt,1)", "(id_pt,2)"}) == inc.morphism_map.at(inc.source.comp.at({"1", "2"})));
    std::set<Id> images;
    for (const auto& [mor, img] : inc.morphism_map) images.insert(img);
    CHECK(images.size() == inc.morphism_map.size());
    CHECK_THROWS_AS(static_cast<void>(fiber_inclusion(g, phi, "nowhere")), Error);
}

TEST_CASE("fiber inclusions of distinct objects have disjoint images") {
    GalleryResult r = free_length4_example();
    Pi2Indexing phi = r.workspace.indexing("Iso");
    Grothendieck g = build_grothendieck(phi);
    std::set<Id> all;
    std::size_t total = 0;
    for (const auto& obj : phi.base.vertical.objects) {
        CatFunctor inc = fiber_inclusion(g, phi, obj);
        CHECK(validate_functor(inc).ok());
        for (const auto& [mor, img] : inc.morphism_map) all.insert(img);
        total += inc.morphism_map.size();
    }
    CHECK(all.size() == total);
}

TEST_CASE("associativity of the twisted composition holds for every stored indexing") {
    // this also exercises validate_indexing from an independent angle: a
    // non-functorial action would break associativity of the build
    for (const auto& ws : {z2_on_z3_workspace(), free_length4_example().workspace}) {
        for (const auto& [iname, decl] : ws.indexings)
            CHECK(validate_category(build_grothendieck(ws.indexing(iname)).category).ok());
    }
}

TEST_CASE("the contravariant build mirrors the covariant build on the opposite decoration") {
    GalleryResult r = free_length4_example();
    Pi2Indexing contra = r.workspace.indexing("DropOp");
    REQUIRE(contra.variance == Variance::Contravariant);

    Pi2Indexing cov;
    cov.name = contra.name;
    cov.base = contra.base;
    cov.base.vertical = opposite_category(contra.base.vertical);
    cov.variance = Variance::Covariant;
    cov.action = contra.action;
    REQUIRE(validate_indexing(cov).ok());
    REQUIRE(validate_indexing(contra).ok());

    FinCategory mirrored = opposite_category(build_grothendieck(cov).category);
    FinCategory direct = build_grothendieck(contra).category;
    CHECK(validate_category(direct).ok());
    CHECK(mirrored.comp == direct.comp);
    CHECK(mirrored.identities == direct.identities);
}
