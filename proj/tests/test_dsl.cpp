#include <doctest.h>

#include "dct/dsl.hpp"
#include "fixtures.hpp"

using namespace dct;
using namespace dct::testing;

TEST_CASE("the running instance parses into one valid indexing") {
    Workspace w = z2_on_z3_workspace();
    REQUIRE(w.monoids.count("Z2"));
    REQUIRE(w.monoids.count("Z3"));
    REQUIRE(w.categories.count("OmegaZ2"));
    REQUIRE(w.twocats.count("B2OmegaZ3"));
    REQUIRE(w.decorations.count("D"));
    REQUIRE(w.indexings.count("Act"));
    CHECK(validate_monoid(w.monoids.at("Z3")).ok());
    CHECK(validate_category(w.categories.at("OmegaZ2")).ok());
    CHECK(validate_two_category(w.twocats.at("B2OmegaZ3")).ok());
    CHECK(validate_indexing(w.indexing("Act")).ok());
}

TEST_CASE("an empty file gives an empty workspace") {
    Workspace w = parse_spec("");
    CHECK(w.monoids.empty());
    CHECK(w.categories.empty());
    CHECK(w == Workspace{});
}

TEST_CASE("comments and CRLF line endings are accepted") {
    Workspace w = parse_spec("# a comment\r\nmonoid T { elements e; unit e; op { (e,e)->e; } }\r\n# done\r\n");
    CHECK(w.monoids.count("T"));
}

TEST_CASE("identities are implicit in source and explicit in the model") {
    Workspace w = parse_spec("category C { obj a; mor f: a->a; comp { (f,f)->id_a; } }");
    const FinCategory& c = w.categories.at("C");
    CHECK(c.morphisms.size() == 2);
    CHECK(c.identities.at("a") == "id_a");
    CHECK(c.comp.at({"f", "id_a"}) == "f");
    CHECK(validate_category(c).ok());
}

TEST_CASE("unresolved references are reported at the reference site") {
    CHECK_THROWS_AS(static_cast<void>(parse_spec("decorated D = (NoCat, NoTc)")), ParseError);
    try {
        static_cast<void>(parse_spec("\n decorated D = (NoCat, NoTc)"));
    } catch (const ParseError& e) {
        CHECK(e.code() == "UnresolvedReference");
        CHECK(e.line() == 2);
    }
}

TEST_CASE("a missing composable entry is a MissingEntry error") {
    const char* src = "category C { obj a; mor f: a->a; }";
    try {
        static_cast<void>(parse_spec(src));
        FAIL("expected MissingEntry");
    } catch (const ParseError& e) {
        CHECK(e.code() == "MissingEntry");
    }
}

TEST_CASE("duplicate names and conflicting entries are rejected") {
    CHECK_THROWS_AS(static_cast<void>(parse_spec("monoid M { elements e; unit e; op { (e,e)->e; } }\n"
                                                 "monoid M { elements e; unit e; op { (e,e)->e; } }")),
                    ParseError);
    CHECK_THROWS_AS(static_cast<void>(parse_spec("category C { obj a; mor f: a->a;\n"
                                                 "  comp { (f,f)->id_a; (f,id_a)->id_a; } }")),
                    ParseError);
}

TEST_CASE("syntax errors carry a position and an expectation") {
    try {
        static_cast<void>(parse_spec("monoid M { elements e; unit e; op { (e,e)=>e; } }"));
        FAIL("expected SyntaxError");
    } catch (const ParseError& e) {
        CHECK(e.code() == "SyntaxError");
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
        CHECK(e.line() == 1);
        CHECK(e.col() > 30);
    }
}

TEST_CASE("parse never crashes on malformed input") {
    for (const char* src : {"monoid", "monoid {", "category C {", "twocat T { obj", "indexing I on D",
                            "{}", "(", "monoid M { elements e; unit x; op { } }", "mor f: a->b;",
                            "indexing I on D { f -> { x } }", "monoid M { elements e; unit e; op { (e,e)->e; }"}) {
        CHECK_THROWS_AS(static_cast<void>(parse_spec(src)), ParseError);
    }
    CHECK(parse_spec("# comment only\n") == Workspace{});
}

TEST_CASE("a wrong fiber element in an indexing row is a FiberMismatch") {
    std::string src = R"(category C { obj a; mor f: a->a; comp { (f,f)->id_a; } }
twocat B { obj a; cell2 m: id_a=>id_a; vcomp { (m,m)->id_id_a; } hcomp { (m,m)->id_id_a; } }
decorated D = (C, B)
indexing I on D { f -> { nope->m; }; }
)";
    try {
        static_cast<void>(parse_spec(src));
        FAIL("expected FiberMismatch");
    } catch (const ParseError& e) {
        CHECK(e.code() == "FiberMismatch");
    }
}

TEST_CASE("round trip is the identity on every gallery workspace") {
    for (const auto& r : {run_example("semidirect-z2-z3"), no_indexing_example(), trivial_pi2_example(),
                          free_length4_example()}) {
        std::string text = serialize(r.workspace);
        Workspace back = parse_spec(text);
        CHECK(back == r.workspace);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("serialization is byte-deterministic across runs") {
    CHECK(serialize(z2_on_z3_workspace()) == serialize(z2_on_z3_workspace()));
}

TEST_CASE("serialized output uses LF only") {
    std::string text = serialize(z2_on_z3_workspace());
    CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("variance flags round trip") {
    Workspace w = free_length4_example().workspace;
    REQUIRE(w.indexings.at("DropOp").variance == Variance::Contravariant);
    Workspace back = parse_spec(serialize(w));
    CHECK(back.indexings.at("DropOp").variance == Variance::Contravariant);
    CHECK(back == w);
}

TEST_CASE("materialized indexings respect variance endpoints") {
    Workspace w = free_length4_example().workspace;
    Pi2Indexing op = w.indexing("DropOp");
    // contravariant action of al: o0->o1 maps the fiber at o1 to the fiber at o0
    CHECK(op.action.at("al").source.elements == pi2(w.twocats.at("BChain"), "o1").monoid.elements);
    CHECK(op.action.at("al").target.elements == pi2(w.twocats.at("BChain"), "o0").monoid.elements);
}
