#include <doctest.h>

#include "dct/core.hpp"
#include "dct/indexing.hpp"
#include "fixtures.hpp"

using namespace dct;
using namespace dct::testing;

TEST_CASE("Z/3 addition table is a commutative monoid") {
    CHECK(validate_monoid(z_mod(3, "Z3")).ok());
}

TEST_CASE("one-element monoid validates") {
    CHECK(validate_monoid(trivial_monoid("T")).ok());
}

TEST_CASE("a broken commutativity entry is reported with its pair") {
    FinCommMonoid m = z_mod(3, "Z3");
    m.op[1][2] = "1";  // 1+2 should be 0
    ValidationReport rep = validate_monoid(m);
    CHECK_FALSE(rep.ok());
    CHECK(rep.has("comm"));
}

TEST_CASE("an undeclared table entry is an UnknownElement issue") {
    FinCommMonoid m = z_mod(2, "Z2");
    m.op[1][1] = "7";
    CHECK(validate_monoid(m).has("UnknownElement"));
}

TEST_CASE("exhaustive law recheck on validated monoids") {
    for (int n : {1, 2, 3, 4, 6}) {
        FinCommMonoid m = z_mod(n, "Z" + std::to_string(n));
        REQUIRE(validate_monoid(m).ok());
        for (const auto& x : m.elements)
            for (const auto& y : m.elements) {
                CHECK(m.apply(x, y) == m.apply(y, x));
                for (const auto& z : m.elements)
                    CHECK(m.apply(m.apply(x, y), z) == m.apply(x, m.apply(y, z)));
            }
    }
}

TEST_CASE("free arrow category validates") {
    CHECK(validate_category(free_arrow()).ok());
}

TEST_CASE("delooping of Z/2 validates") {
    CHECK(validate_category(group_delooping(z_mod(2, "Z2"), "pt")).ok());
}

TEST_CASE("a missing composable pair is a MissingComposite issue") {
    FinCategory c = free_arrow();
    c.comp.erase({"arrow", "id_a0"});
    CHECK(validate_category(c).has("MissingComposite"));
}

TEST_CASE("a non-composable comp entry is rejected") {
    FinCategory c = free_arrow();
    c.comp[{"arrow", "arrow"}] = "arrow";
    CHECK(validate_category(c).has("SpuriousComposite"));
}

TEST_CASE("opposite category swaps boundaries and transposes composition") {
    FinCategory op = opposite_category(free_arrow());
    CHECK(validate_category(op).ok());
    CHECK(op.morphism("arrow")->src == "a1");
    CHECK(op.morphism("arrow")->tgt == "a0");
    CHECK(op.comp.at({"id_a0", "arrow"}) == "arrow");
}

TEST_CASE("opposite_category is an involution") {
    FinCategory c = group_delooping(z_mod(2, "Z2"), "pt");
    CHECK(opposite_category(opposite_category(c)) == c);
    CHECK(opposite_category(opposite_category(free_arrow())) == free_arrow());
    // an abelian delooping is its own opposite
    CHECK(opposite_category(c) == c);
}

TEST_CASE("compose_homs composes tables pointwise") {
    FinCommMonoid z3 = z_mod(3, "Z3");
    MonoidHom neg{z3, z3, {"0", "2", "1"}};
    CHECK(compose_homs(neg, neg) == identity_hom(z3));
    CHECK(compose_homs(neg, identity_hom(z3)) == neg);

    MonoidHom to_unit{z3, z3, {"0", "0", "0"}};
    CHECK(compose_homs(to_unit, neg) == to_unit);
    CHECK(compose_homs(neg, to_unit) == to_unit);
}

TEST_CASE("compose_homs rejects mismatched fibers") {
    FinCommMonoid z3 = z_mod(3, "Z3");
    FinCommMonoid z2 = z_mod(2, "Z2");
    MonoidHom down{z3, z2, {"0", "0", "0"}};
    MonoidHom up{z2, z3, {"0", "0"}};
    CHECK(validate_hom(down).ok());
    CHECK_THROWS_AS(static_cast<void>(compose_homs(down, down)), Error);
    CHECK(validate_hom(compose_homs(down, up)).ok());
}

TEST_CASE("compose_homs is associative and unital on test fibers") {
    FinCommMonoid z6 = z_mod(6, "Z6");
    std::vector<MonoidHom> homs = enumerate_monoid_homs(z6, z6);
    REQUIRE(homs.size() == 6);
    for (const auto& f : homs) {
        CHECK(compose_homs(f, identity_hom(z6)) == f);
        CHECK(compose_homs(identity_hom(z6), f) == f);
        for (const auto& g : homs)
            for (const auto& h : homs)
                CHECK(compose_homs(compose_homs(h, g), f) == compose_homs(h, compose_homs(g, f)));
    }
}

TEST_CASE("validate_functor checks preservation exhaustively") {
    FinCategory z2cat = group_delooping(z_mod(2, "Z2"), "pt");
    CatFunctor identity;
    identity.source = z2cat;
    identity.target = z2cat;
    identity.object_map = {{"pt", "pt"}};
    identity.morphism_map = {{"id_pt", "id_pt"}, {"1", "1"}};
    CHECK(validate_functor(identity).ok());

    // collapsing Z/2 onto its unit is still a functor
    CatFunctor collapse = identity;
    collapse.morphism_map["1"] = "id_pt";
    CHECK(validate_functor(collapse).ok());

    // sending the identity elsewhere is not
    CatFunctor bad = identity;
    bad.morphism_map["id_pt"] = "1";
    CHECK_FALSE(validate_functor(bad).ok());
}
