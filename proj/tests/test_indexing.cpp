#include <doctest.h>

#include <set>

#include "dct/indexing.hpp"
#include "fixtures.hpp"

using namespace dct;
using namespace dct::testing;

TEST_CASE("the negation action on ( OmegaZ2, B2OmegaZ3 ) is a valid indexing") {
    Workspace w = z2_on_z3_workspace();
    CHECK(validate_indexing(w.indexing("Act")).ok());
}

TEST_CASE("a non-hom action table is rejected as NotAHom") {
    Workspace w = z2_on_z3_workspace();
    Pi2Indexing phi = w.indexing("Act");
    // x -> x+1 preserves nothing
    phi.action.at("g").map = {"1", "2", "0"};
    ValidationReport rep = validate_indexing(phi);
    CHECK(rep.has("NotAHom"));
}

TEST_CASE("a constant-to-unit action fails functoriality since g*g = e") {
    Workspace w = z2_on_z3_workspace();
    Pi2Indexing phi = w.indexing("Act");
    phi.action.at("g").map = {"id_id_pt", "id_id_pt", "id_id_pt"};
    ValidationReport rep = validate_indexing(phi);
    CHECK(rep.has("NotFunctorial"));
}

TEST_CASE("a wrong fiber is rejected as FiberMismatch") {
    Workspace w = z2_on_z3_workspace();
    Pi2Indexing phi = w.indexing("Act");
    phi.action.at("g").source = z_mod(2, "Z2");
    phi.action.at("g").map = {"0", "1"};
    CHECK(validate_indexing(phi).has("FiberMismatch"));
}

TEST_CASE("exactly two covariant indexings exist on the Z/2-on-Z/3 decoration") {
    Workspace w = z2_on_z3_workspace();
    std::vector<Pi2Indexing> found = enumerate_indexings(w.decorated("D"), Variance::Covariant);
    REQUIRE(found.size() == 2);
    for (const auto& phi : found) CHECK(validate_indexing(phi).ok());
    // one action is trivial, the other is the negation
    std::set<std::vector<Id>> tables;
    for (const auto& phi : found) tables.insert(phi.action.at("g").map);
    CHECK(tables.count({"id_id_pt", "1", "2"}) == 1);
    CHECK(tables.count({"id_id_pt", "2", "1"}) == 1);
}

TEST_CASE("the no-indexing instance admits no indexings of either variance") {
    GalleryResult r = no_indexing_example();
    DecoratedTwoCat d = r.workspace.decorated("DNoIdx");
    CHECK(enumerate_indexings(d, Variance::Covariant).empty());
    CHECK(enumerate_indexings(d, Variance::Contravariant).empty());
}

TEST_CASE("trivial fibers admit exactly one indexing and one opindexing") {
    GalleryResult r = trivial_pi2_example();
    DecoratedTwoCat d = r.workspace.decorated("DTriv");
    CHECK(enumerate_indexings(d, Variance::Covariant).size() == 1);
    CHECK(enumerate_indexings(d, Variance::Contravariant).size() == 1);
}

TEST_CASE("enumeration is deterministic across runs") {
    Workspace w = z2_on_z3_workspace();
    DecoratedTwoCat d = w.decorated("D");
    CHECK(enumerate_indexings(d, Variance::Covariant) == enumerate_indexings(d, Variance::Covariant));
}

TEST_CASE("covariant indexings of the opposite decoration are the contravariant ones") {
    for (const auto& ws : {z2_on_z3_workspace(), free_length4_example().workspace}) {
        for (const auto& [name, refs] : ws.decorations) {
            DecoratedTwoCat d = ws.decorated(name);
            DecoratedTwoCat op = d;
            op.vertical = opposite_category(d.vertical);
            std::vector<Pi2Indexing> cov_of_op = enumerate_indexings(op, Variance::Covariant);
            std::vector<Pi2Indexing> contra = enumerate_indexings(d, Variance::Contravariant);
            REQUIRE(cov_of_op.size() == contra.size());
            for (std::size_t i = 0; i < contra.size(); ++i) CHECK(cov_of_op[i].action == contra[i].action);
        }
    }
}

TEST_CASE("on group-like decorations every enumerated action hom is invertible") {
    Workspace w = z2_on_z3_workspace();
    for (const auto& phi : enumerate_indexings(w.decorated("D"), Variance::Covariant))
        for (const auto& [mor, hom] : phi.action) {
            std::set<Id> image(hom.map.begin(), hom.map.end());
            CHECK(image.size() == hom.map.size());
            CHECK(hom.apply(hom.source.unit) == hom.target.unit);
        }
}

TEST_CASE("action_of returns stored homs and rejects unknown morphisms") {
    Workspace w = z2_on_z3_workspace();
    Pi2Indexing phi = w.indexing("Act");
    CHECK(action_of(phi, "g").map == std::vector<Id>{"id_id_pt", "2", "1"});
    CHECK(action_of(phi, "id_pt") == identity_hom(action_of(phi, "g").source));
    CHECK_THROWS_AS(static_cast<void>(action_of(phi, "nope")), Error);
}

TEST_CASE("the search cap yields SearchBudgetExceeded deterministically") {
    Workspace w = z2_on_z3_workspace();
    CHECK_THROWS_AS(static_cast<void>(enumerate_indexings(w.decorated("D"), Variance::Covariant, 2)), Error);
    try {
        static_cast<void>(enumerate_indexings(w.decorated("D"), Variance::Covariant, 2));
    } catch (const Error& e) {
        CHECK(e.code() == "SearchBudgetExceeded");
    }
}

TEST_CASE("every enumerated indexing revalidates, twice") {
    GalleryResult r = free_length4_example();
    DecoratedTwoCat d = r.workspace.decorated("DChain");
    std::vector<Pi2Indexing> cov = enumerate_indexings(d, Variance::Covariant);
    CHECK(cov.size() == 2);
    for (const auto& phi : cov) CHECK(validate_indexing(phi).ok());
    std::vector<Pi2Indexing> con = enumerate_indexings(d, Variance::Contravariant);
    CHECK(con.size() == 2);
    for (const auto& phi : con) CHECK(validate_indexing(phi).ok());
}
