#include <doctest.h>

#include "dct/freegg.hpp"
#include "fixtures.hpp"

using namespace dct;
using namespace dct::testing;

namespace {

DecoratedTwoCat chain() { return free_length4_example().workspace.decorated("DChain"); }

}  // namespace

TEST_CASE("unit atoms merge through composition of their frames") {
    DecoratedTwoCat d = chain();
    FreeWord w = make_word(d, {"U_al", "U_be"});
    FreeWord n = normalize_word(d, w);
    REQUIRE(n.layers.size() == 1);
    CHECK(n.layers[0].kind == FreeLayer::Kind::Unit);
    CHECK(n.layers[0].ref == "beal");
}

TEST_CASE("adjacent globular layers merge through vertical composition") {
    DecoratedTwoCat d = chain();
    FreeWord n = normalize_word(d, make_word(d, {"m0", "m0"}));
    REQUIRE(n.layers.size() == 1);
    CHECK(n.layers[0].ref == "id_id_o0");
}

TEST_CASE("identity layers are absorbed by adjacent unit atoms") {
    DecoratedTwoCat d = chain();
    FreeWord n = normalize_word(d, make_word(d, {"id_id_o0", "U_al", "id_id_o1"}));
    REQUIRE(n.layers.size() == 1);
    CHECK(n.layers[0].render() == "U_al");
}

TEST_CASE("unit atoms of identity morphisms become identity cells") {
    DecoratedTwoCat d = chain();
    FreeWord w = make_word(d, {"U_id_o0"});
    CHECK(w.layers[0].kind == FreeLayer::Kind::Globular);
    CHECK(w.layers[0].ref == "id_id_o0");
}

TEST_CASE("the designated word is already normal") {
    DecoratedTwoCat d = chain();
    FreeWord w = make_word(d, {"m0", "U_al", "m1", "U_be"});
    CHECK(normalize_word(d, w) == w);
    CHECK(word_frame(d, w) == "beal");
    auto [top, bottom] = word_boundary(d, w);
    CHECK(top == "id_o0");
    CHECK(bottom == "id_o2");
}

TEST_CASE("normalization is idempotent and preserves frame and boundary") {
    DecoratedTwoCat d = chain();
    for (const auto& atoms : std::vector<std::vector<std::string>>{
             {"m0", "U_al", "m1", "U_be"},
             {"m0", "m0", "U_al", "U_be"},
             {"id_id_o0", "U_al", "id_id_o1", "U_be", "id_id_o2"},
             {"U_al", "m1", "m1", "U_be"}}) {
        FreeWord w = make_word(d, atoms);
        FreeWord n = normalize_word(d, w);
        CHECK(normalize_word(d, n) == n);
        CHECK(word_frame(d, n) == word_frame(d, w));
        CHECK(word_boundary(d, n) == word_boundary(d, w));
    }
}

TEST_CASE("ill-formed words are rejected") {
    DecoratedTwoCat d = chain();
    CHECK_THROWS_AS(static_cast<void>(make_word(d, {"m0", "U_be"})), Error);   // not composable
    CHECK_THROWS_AS(static_cast<void>(make_word(d, {"nothing"})), Error);      // unknown atom
    CHECK_THROWS_AS(static_cast<void>(make_word(d, {})), Error);               // empty
}

TEST_CASE("the designated word needs exactly four atoms") {
    DecoratedTwoCat d = chain();
    FreeWord w = make_word(d, {"m0", "U_al", "m1", "U_be"});
    CHECK(min_factorization_length(d, w, 6) == 4);
}

TEST_CASE("minimum lengths of the smaller example words") {
    DecoratedTwoCat d = chain();
    CHECK(min_factorization_length(d, make_word(d, {"U_al"}), 6) == 1);
    CHECK(min_factorization_length(d, make_word(d, {"m0", "U_al"}), 6) == 2);
    CHECK(min_factorization_length(d, make_word(d, {"U_al", "m1"}), 6) == 2);
    CHECK(min_factorization_length(d, make_word(d, {"U_al", "U_be"}), 6) == 1);
}

TEST_CASE("the minimum is invariant under normalization and stable in the budget") {
    DecoratedTwoCat d = chain();
    FreeWord w = make_word(d, {"m0", "U_al", "m1", "U_be"});
    CHECK(min_factorization_length(d, normalize_word(d, w), 6) == 4);
    CHECK(min_factorization_length(d, w, 4) == 4);
    CHECK(min_factorization_length(d, w, 5) == 4);
    CHECK(min_factorization_length(d, w, 7) == 4);
}

TEST_CASE("budgets below the normal form length are rejected") {
    DecoratedTwoCat d = chain();
    FreeWord w = make_word(d, {"m0", "U_al", "m1", "U_be"});
    CHECK_THROWS_AS(static_cast<void>(min_factorization_length(d, w, 3)), Error);
    try {
        static_cast<void>(min_factorization_length(d, w, 3));
    } catch (const Error& e) {
        CHECK(e.code() == "BudgetTooSmall");
    }
}
