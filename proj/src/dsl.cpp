#include "dct/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <functional>
#include <sstream>

namespace dct {

namespace {

// ---------------------------------------------------------------------------
// lexer
// ---------------------------------------------------------------------------

enum class Tok { Ident, LBrace, RBrace, LParen, RParen, Comma, Semi, Colon, Equals, Arrow, DArrow, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int col;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "identifier";
        case Tok::LBrace: return "'{'";
        case Tok::RBrace: return "'}'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Semi: return "';'";
        case Tok::Colon: return "':'";
        case Tok::Equals: return "'='";
        case Tok::Arrow: return "'->'";
        case Tok::DArrow: return "'=>'";
        case Tok::End: return "end of input";
    }
    return "?";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; }

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            advance(1);
            continue;
        }
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        int tl = line, tc = col;
        if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::Arrow, "->", tl, tc});
            advance(2);
            continue;
        }
        if (c == '=' && i + 1 < text.size() && text[i + 1] == '>') {
            out.push_back({Tok::DArrow, "=>", tl, tc});
            advance(2);
            continue;
        }
        switch (c) {
            case '{': out.push_back({Tok::LBrace, "{", tl, tc}); advance(1); continue;
            case '}': out.push_back({Tok::RBrace, "}", tl, tc}); advance(1); continue;
            case '(': out.push_back({Tok::LParen, "(", tl, tc}); advance(1); continue;
            case ')': out.push_back({Tok::RParen, ")", tl, tc}); advance(1); continue;
            case ',': out.push_back({Tok::Comma, ",", tl, tc}); advance(1); continue;
            case ';': out.push_back({Tok::Semi, ";", tl, tc}); advance(1); continue;
            case ':': out.push_back({Tok::Colon, ":", tl, tc}); advance(1); continue;
            case '=': out.push_back({Tok::Equals, "=", tl, tc}); advance(1); continue;
            default: break;
        }
        if (ident_char(c) && c != '\'') {
            std::size_t j = i;
            while (j < text.size() && ident_char(text[j])) ++j;
            out.push_back({Tok::Ident, text.substr(i, j - i), tl, tc});
            advance(j - i);
            continue;
        }
        throw ParseError("SyntaxError", line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

// ---------------------------------------------------------------------------
// parser
// ---------------------------------------------------------------------------

using PairTable = std::vector<std::pair<std::pair<Id, Id>, Id>>;  // ((x,y) -> z) in source order

struct Parser {
    std::vector<Token> toks;
    std::size_t pos = 0;

    const Token& peek() const { return toks[pos]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        throw ParseError("SyntaxError", t.line, t.col,
                         "expected " + expected + ", found " +
                             (t.kind == Tok::Ident ? "'" + t.text + "'" : tok_name(t.kind)));
    }

    Token expect(Tok kind) {
        if (peek().kind != kind) fail(tok_name(kind));
        return toks[pos++];
    }

    Token expect_keyword(const std::string& kw) {
        if (peek().kind != Tok::Ident || peek().text != kw) fail("'" + kw + "'");
        return toks[pos++];
    }

    bool accept_keyword(const std::string& kw) {
        if (peek().kind == Tok::Ident && peek().text == kw) {
            ++pos;
            return true;
        }
        return false;
    }

    bool accept(Tok kind) {
        if (peek().kind == kind) {
            ++pos;
            return true;
        }
        return false;
    }

    Id ident() { return expect(Tok::Ident).text; }

    std::vector<Id> ident_list_until_semi() {
        std::vector<Id> out;
        while (peek().kind == Tok::Ident) out.push_back(ident());
        expect(Tok::Semi);
        if (out.empty()) fail("at least one identifier");
        return out;
    }

    // "{ (a,b)->c; ... }"
    PairTable pair_table() {
        PairTable out;
        expect(Tok::LBrace);
        while (!accept(Tok::RBrace)) {
            expect(Tok::LParen);
            Id x = ident();
            expect(Tok::Comma);
            Id y = ident();
            expect(Tok::RParen);
            expect(Tok::Arrow);
            Id z = ident();
            expect(Tok::Semi);
            out.push_back({{x, y}, z});
        }
        return out;
    }
};

[[noreturn]] void semantic_fail(const std::string& code, const Token& at, const std::string& message) {
    throw ParseError(code, at.line, at.col, message);
}

// Inserts user table entries on top of the already-generated auto rows.
// Restating an auto row is allowed when consistent; contradicting one, or
// giving the same key twice, is rejected.
void merge_entries(std::map<std::pair<Id, Id>, Id>& table, const PairTable& entries, const Token& at,
                   const std::string& what) {
    std::set<std::pair<Id, Id>> seen;
    for (const auto& [key, val] : entries) {
        if (!seen.insert(key).second)
            semantic_fail("DuplicateEntry", at,
                          what + " entry (" + key.first + "," + key.second + ") given twice");
        auto it = table.find(key);
        if (it != table.end() && it->second != val)
            semantic_fail("DuplicateEntry", at, what + " entry (" + key.first + "," + key.second +
                                                   ") conflicts with a derivable row");
        table[key] = val;
    }
}

}  // namespace

DecoratedTwoCat Workspace::decorated(const Id& name) const {
    auto it = decorations.find(name);
    if (it == decorations.end()) throw Error("UnresolvedReference", "no decorated 2-category named '" + name + "'");
    return DecoratedTwoCat{categories.at(it->second.first), twocats.at(it->second.second)};
}

Pi2Indexing Workspace::indexing(const Id& name) const {
    auto it = indexings.find(name);
    if (it == indexings.end()) throw Error("UnresolvedReference", "no indexing named '" + name + "'");
    const IndexingDecl& decl = it->second;

    Pi2Indexing phi;
    phi.name = decl.name;
    phi.base = decorated(decl.decorated);
    phi.variance = decl.variance;

    std::map<Id, Pi2Fiber> fibers;
    for (const auto& a : phi.base.vertical.objects) fibers.emplace(a, pi2(phi.base.horizontal, a));

    for (const auto& f : phi.base.vertical.morphisms) {
        if (phi.base.vertical.is_identity(f.name)) {
            phi.action.emplace(f.name, identity_hom(fibers.at(f.src).monoid));
            continue;
        }
        Id sobj = phi.variance == Variance::Covariant ? f.src : f.tgt;
        Id tobj = phi.variance == Variance::Covariant ? f.tgt : f.src;
        const FinCommMonoid& src = fibers.at(sobj).monoid;
        const FinCommMonoid& tgt = fibers.at(tobj).monoid;
        MonoidHom h;
        h.source = src;
        h.target = tgt;
        auto row = decl.rows.find(f.name);
        for (const auto& e : src.elements) {
            if (e == src.unit) {
                h.map.push_back(tgt.unit);
                continue;
            }
            if (row == decl.rows.end() || !row->second.count(e))
                throw Error("MissingEntry", "indexing '" + name + "' has no image for element '" + e +
                                                "' under morphism '" + f.name + "'");
            h.map.push_back(row->second.at(e));
        }
        phi.action.emplace(f.name, std::move(h));
    }
    return phi;
}

namespace {

// Fiber elements at an object, syntactically: 2-cells on the identity
// 1-cell. Used by the parser before any law checking has happened.
std::vector<Id> syntactic_fiber(const Fin2Category& b, const Id& obj) {
    std::vector<Id> out;
    const Id& ida = b.identity1.at(obj);
    for (const auto& c : b.twocells)
        if (c.src == ida && c.tgt == ida) out.push_back(c.name);
    return out;
}

void parse_monoid(Parser& p, Workspace& w) {
    Token at = p.expect_keyword("monoid");
    Token name_tok = p.expect(Tok::Ident);
    Id name = name_tok.text;
    if (w.monoids.count(name)) semantic_fail("DuplicateName", name_tok, "monoid '" + name + "' declared twice");

    FinCommMonoid m;
    m.name = name;
    p.expect(Tok::LBrace);
    p.expect_keyword("elements");
    m.elements = p.ident_list_until_semi();
    p.expect_keyword("unit");
    m.unit = p.ident();
    p.expect(Tok::Semi);
    p.expect_keyword("op");
    PairTable entries = p.pair_table();
    p.expect(Tok::RBrace);

    std::set<Id> declared(m.elements.begin(), m.elements.end());
    if (declared.size() != m.elements.size())
        semantic_fail("DuplicateName", name_tok, "monoid '" + name + "' repeats an element");
    if (!declared.count(m.unit))
        semantic_fail("UnresolvedReference", name_tok, "unit '" + m.unit + "' is not an element of '" + name + "'");

    std::map<std::pair<Id, Id>, Id> table;
    for (const auto& [key, val] : entries) {
        if (!declared.count(key.first) || !declared.count(key.second) || !declared.count(val))
            semantic_fail("UnresolvedReference", name_tok,
                          "op entry (" + key.first + "," + key.second + ")->" + val + " names an undeclared element");
        if (table.count(key))
            semantic_fail("DuplicateEntry", name_tok, "op entry (" + key.first + "," + key.second + ") given twice");
        table[key] = val;
    }
    m.op.resize(m.elements.size());
    for (std::size_t i = 0; i < m.elements.size(); ++i) {
        m.op[i].resize(m.elements.size());
        for (std::size_t j = 0; j < m.elements.size(); ++j) {
            auto it = table.find({m.elements[i], m.elements[j]});
            if (it == table.end())
                semantic_fail("MissingEntry", name_tok, "op entry (" + m.elements[i] + "," + m.elements[j] +
                                                            ") is missing in monoid '" + name + "'");
            m.op[i][j] = it->second;
        }
    }
    w.monoids.emplace(name, std::move(m));
    w.positions[name] = {at.line, at.col};
}

void parse_category(Parser& p, Workspace& w) {
    Token at = p.expect_keyword("category");
    Token name_tok = p.expect(Tok::Ident);
    Id name = name_tok.text;
    if (w.categories.count(name)) semantic_fail("DuplicateName", name_tok, "category '" + name + "' declared twice");

    FinCategory c;
    c.name = name;
    p.expect(Tok::LBrace);
    p.expect_keyword("obj");
    c.objects = p.ident_list_until_semi();

    std::vector<FinMorphism> declared;
    while (p.accept_keyword("mor")) {
        FinMorphism m;
        m.name = p.ident();
        p.expect(Tok::Colon);
        m.src = p.ident();
        p.expect(Tok::Arrow);
        m.tgt = p.ident();
        p.expect(Tok::Semi);
        declared.push_back(std::move(m));
    }
    PairTable entries;
    if (p.accept_keyword("comp")) entries = p.pair_table();
    p.expect(Tok::RBrace);

    std::set<Id> objs(c.objects.begin(), c.objects.end());
    if (objs.size() != c.objects.size())
        semantic_fail("DuplicateName", name_tok, "category '" + name + "' repeats an object");

    std::set<Id> used_names;
    // identities first, then declared morphisms
    for (const auto& o : c.objects) {
        Id idm = "id_" + o;
        if (!used_names.insert(idm).second)
            semantic_fail("DuplicateName", name_tok, "auto identity '" + idm + "' collides in '" + name + "'");
        c.morphisms.push_back({idm, o, o});
        c.identities[o] = idm;
    }
    for (const auto& m : declared) {
        if (!used_names.insert(m.name).second)
            semantic_fail("DuplicateName", name_tok, "morphism '" + m.name + "' collides in '" + name + "'");
        if (!objs.count(m.src) || !objs.count(m.tgt))
            semantic_fail("UnresolvedReference", name_tok,
                          "morphism '" + m.name + "' references an undeclared object");
        c.morphisms.push_back(m);
    }

    // auto rows: composition with identities
    for (const auto& m : c.morphisms) {
        c.comp[{m.name, c.identities.at(m.src)}] = m.name;
        c.comp[{c.identities.at(m.tgt), m.name}] = m.name;
    }
    auto find_mor = [&](const Id& n) -> const FinMorphism* { return c.morphism(n); };
    for (const auto& [key, val] : entries) {
        const FinMorphism* g = find_mor(key.first);
        const FinMorphism* f = find_mor(key.second);
        if (!g || !f || !find_mor(val))
            semantic_fail("UnresolvedReference", name_tok,
                          "comp entry (" + key.first + "," + key.second + ")->" + val +
                              " names an undeclared morphism");
        if (f->tgt != g->src)
            semantic_fail("BadEntry", name_tok,
                          "comp entry (" + key.first + "," + key.second + ") is not a composable pair");
    }
    merge_entries(c.comp, entries, name_tok, "comp");
    for (const auto& g : c.morphisms)
        for (const auto& f : c.morphisms)
            if (f.tgt == g.src && !c.comp.count({g.name, f.name}))
                semantic_fail("MissingEntry", name_tok,
                              "comp entry (" + g.name + "," + f.name + ") is missing in category '" + name + "'");

    w.categories.emplace(name, std::move(c));
    w.positions[name] = {at.line, at.col};
}

void parse_twocat(Parser& p, Workspace& w) {
    Token at = p.expect_keyword("twocat");
    Token name_tok = p.expect(Tok::Ident);
    Id name = name_tok.text;
    if (w.twocats.count(name)) semantic_fail("DuplicateName", name_tok, "twocat '" + name + "' declared twice");

    Fin2Category b;
    b.name = name;
    p.expect(Tok::LBrace);
    p.expect_keyword("obj");
    b.zerocells = p.ident_list_until_semi();

    std::vector<OneCell> declared1;
    while (p.accept_keyword("cell1")) {
        OneCell c;
        c.name = p.ident();
        p.expect(Tok::Colon);
        c.src = p.ident();
        p.expect(Tok::Arrow);
        c.tgt = p.ident();
        p.expect(Tok::Semi);
        declared1.push_back(std::move(c));
    }
    PairTable comp1_entries;
    if (p.accept_keyword("comp1")) comp1_entries = p.pair_table();

    std::vector<TwoCell> declared2;
    while (p.accept_keyword("cell2")) {
        TwoCell c;
        c.name = p.ident();
        p.expect(Tok::Colon);
        c.src = p.ident();
        p.expect(Tok::DArrow);
        c.tgt = p.ident();
        p.expect(Tok::Semi);
        declared2.push_back(std::move(c));
    }
    PairTable vcomp_entries, hcomp_entries;
    if (p.accept_keyword("vcomp")) vcomp_entries = p.pair_table();
    if (p.accept_keyword("hcomp")) hcomp_entries = p.pair_table();
    p.expect(Tok::RBrace);

    std::set<Id> zeros(b.zerocells.begin(), b.zerocells.end());
    if (zeros.size() != b.zerocells.size())
        semantic_fail("DuplicateName", name_tok, "twocat '" + name + "' repeats a 0-cell");

    std::set<Id> names1;
    for (const auto& a : b.zerocells) {
        Id idc = "id_" + a;
        if (!names1.insert(idc).second)
            semantic_fail("DuplicateName", name_tok, "auto identity 1-cell '" + idc + "' collides");
        b.onecells.push_back({idc, a, a});
        b.identity1[a] = idc;
    }
    for (const auto& c : declared1) {
        if (!names1.insert(c.name).second)
            semantic_fail("DuplicateName", name_tok, "1-cell '" + c.name + "' collides in '" + name + "'");
        if (!zeros.count(c.src) || !zeros.count(c.tgt))
            semantic_fail("UnresolvedReference", name_tok, "1-cell '" + c.name + "' references an undeclared 0-cell");
        b.onecells.push_back(c);
    }

    auto onecell = [&](const Id& n) { return b.onecell(n); };
    for (const auto& c : b.onecells) {
        b.comp1[{c.name, b.identity1.at(c.src)}] = c.name;
        b.comp1[{b.identity1.at(c.tgt), c.name}] = c.name;
    }
    auto is_id1 = [&](const Id& n) {
        for (const auto& [a, idc] : b.identity1)
            if (idc == n) return true;
        return false;
    };
    for (const auto& [key, val] : comp1_entries) {
        const OneCell* g = onecell(key.first);
        const OneCell* f = onecell(key.second);
        if (!g || !f || !onecell(val))
            semantic_fail("UnresolvedReference", name_tok,
                          "comp1 entry (" + key.first + "," + key.second + ") names an undeclared 1-cell");
        if (f->tgt != g->src)
            semantic_fail("BadEntry", name_tok,
                          "comp1 entry (" + key.first + "," + key.second + ") is not composable");
    }
    merge_entries(b.comp1, comp1_entries, name_tok, "comp1");
    for (const auto& g : b.onecells)
        for (const auto& f : b.onecells)
            if (f.tgt == g.src && !b.comp1.count({g.name, f.name}))
                semantic_fail("MissingEntry", name_tok,
                              "comp1 entry (" + g.name + "," + f.name + ") is missing in '" + name + "'");

    // identity 2-cells first, in 1-cell order, then declared 2-cells
    std::set<Id> names2;
    for (const auto& c : b.onecells) {
        Id idc = "id_" + c.name;
        if (!names2.insert(idc).second)
            semantic_fail("DuplicateName", name_tok, "auto identity 2-cell '" + idc + "' collides");
        b.twocells.push_back({idc, c.name, c.name});
        b.identity2[c.name] = idc;
    }
    for (const auto& c : declared2) {
        if (!names2.insert(c.name).second)
            semantic_fail("DuplicateName", name_tok, "2-cell '" + c.name + "' collides in '" + name + "'");
        const OneCell* s = onecell(c.src);
        const OneCell* t = onecell(c.tgt);
        if (!s || !t)
            semantic_fail("UnresolvedReference", name_tok, "2-cell '" + c.name + "' references an undeclared 1-cell");
        if (s->src != t->src || s->tgt != t->tgt)
            semantic_fail("BadEntry", name_tok, "2-cell '" + c.name + "' is not between parallel 1-cells");
        b.twocells.push_back(c);
    }

    auto twocell = [&](const Id& n) { return b.twocell(n); };
    auto is_id2 = [&](const Id& n) { return b.is_identity2(n); };
    auto is_hunit = [&](const Id& n) {
        // identity 2-cell of an identity 1-cell
        for (const auto& [a, idc] : b.identity1)
            if (b.identity2.at(idc) == n) return true;
        return false;
    };

    // vertical auto rows: identities absorb
    for (const auto& c : b.twocells) {
        b.vcomp2[{c.name, b.identity2.at(c.src)}] = c.name;
        b.vcomp2[{b.identity2.at(c.tgt), c.name}] = c.name;
    }
    for (const auto& [key, val] : vcomp_entries) {
        const TwoCell* s = twocell(key.first);
        const TwoCell* f = twocell(key.second);
        if (!s || !f || !twocell(val))
            semantic_fail("UnresolvedReference", name_tok,
                          "vcomp entry (" + key.first + "," + key.second + ") names an undeclared 2-cell");
        if (f->tgt != s->src)
            semantic_fail("BadEntry", name_tok,
                          "vcomp entry (" + key.first + "," + key.second + ") is not composable");
    }
    merge_entries(b.vcomp2, vcomp_entries, name_tok, "vcomp");
    for (const auto& s : b.twocells)
        for (const auto& f : b.twocells)
            if (f.tgt == s.src && !b.vcomp2.count({s.name, f.name}))
                semantic_fail("MissingEntry", name_tok,
                              "vcomp entry (" + s.name + "," + f.name + ") is missing in '" + name + "'");

    // horizontal auto rows: identity-of-identity units, identity pairs
    auto hcomposable = [&](const TwoCell& l, const TwoCell& r) {
        return onecell(l.src)->tgt == onecell(r.src)->src;
    };
    for (const auto& l : b.twocells)
        for (const auto& r : b.twocells) {
            if (!hcomposable(l, r)) continue;
            if (is_hunit(l.name)) b.hcomp2[{l.name, r.name}] = r.name;
            if (is_hunit(r.name)) b.hcomp2[{l.name, r.name}] = l.name;
            if (is_id2(l.name) && is_id2(r.name))
                b.hcomp2[{l.name, r.name}] = b.identity2.at(b.comp1.at({twocell(r.name)->src, twocell(l.name)->src}));
        }
    for (const auto& [key, val] : hcomp_entries) {
        const TwoCell* l = twocell(key.first);
        const TwoCell* r = twocell(key.second);
        if (!l || !r || !twocell(val))
            semantic_fail("UnresolvedReference", name_tok,
                          "hcomp entry (" + key.first + "," + key.second + ") names an undeclared 2-cell");
        if (!hcomposable(*l, *r))
            semantic_fail("BadEntry", name_tok,
                          "hcomp entry (" + key.first + "," + key.second + ") is not composable");
    }
    merge_entries(b.hcomp2, hcomp_entries, name_tok, "hcomp");
    for (const auto& l : b.twocells)
        for (const auto& r : b.twocells)
            if (hcomposable(l, r) && !b.hcomp2.count({l.name, r.name}))
                semantic_fail("MissingEntry", name_tok,
                              "hcomp entry (" + l.name + "," + r.name + ") is missing in '" + name + "'");

    w.twocats.emplace(name, std::move(b));
    w.positions[name] = {at.line, at.col};
}

void parse_decorated(Parser& p, Workspace& w) {
    Token at = p.expect_keyword("decorated");
    Token name_tok = p.expect(Tok::Ident);
    Id name = name_tok.text;
    if (w.decorations.count(name))
        semantic_fail("DuplicateName", name_tok, "decorated 2-category '" + name + "' declared twice");
    p.expect(Tok::Equals);
    p.expect(Tok::LParen);
    Token cat_tok = p.expect(Tok::Ident);
    p.expect(Tok::Comma);
    Token tc_tok = p.expect(Tok::Ident);
    p.expect(Tok::RParen);
    p.accept(Tok::Semi);

    if (!w.categories.count(cat_tok.text))
        semantic_fail("UnresolvedReference", cat_tok, "no category named '" + cat_tok.text + "'");
    if (!w.twocats.count(tc_tok.text))
        semantic_fail("UnresolvedReference", tc_tok, "no twocat named '" + tc_tok.text + "'");

    w.decorations.emplace(name, std::make_pair(cat_tok.text, tc_tok.text));
    w.positions[name] = {at.line, at.col};
}

void parse_indexing(Parser& p, Workspace& w) {
    Token at = p.expect_keyword("indexing");
    Token name_tok = p.expect(Tok::Ident);
    Id name = name_tok.text;
    if (w.indexings.count(name)) semantic_fail("DuplicateName", name_tok, "indexing '" + name + "' declared twice");
    p.expect_keyword("on");
    Token dec_tok = p.expect(Tok::Ident);
    if (!w.decorations.count(dec_tok.text))
        semantic_fail("UnresolvedReference", dec_tok, "no decorated 2-category named '" + dec_tok.text + "'");

    IndexingDecl decl;
    decl.name = name;
    decl.decorated = dec_tok.text;
    decl.variance = p.accept_keyword("op") ? Variance::Contravariant : Variance::Covariant;

    const FinCategory& cat = w.categories.at(w.decorations.at(dec_tok.text).first);
    const Fin2Category& b = w.twocats.at(w.decorations.at(dec_tok.text).second);

    p.expect(Tok::LBrace);
    while (!p.accept(Tok::RBrace)) {
        Token mor_tok = p.expect(Tok::Ident);
        p.expect(Tok::Arrow);
        std::map<Id, Id> row;
        p.expect(Tok::LBrace);
        while (!p.accept(Tok::RBrace)) {
            Id x = p.ident();
            p.expect(Tok::Arrow);
            Id y = p.ident();
            p.expect(Tok::Semi);
            if (row.count(x))
                semantic_fail("DuplicateEntry", mor_tok, "row for '" + mor_tok.text + "' maps '" + x + "' twice");
            row[x] = y;
        }
        p.expect(Tok::Semi);

        const FinMorphism* f = cat.morphism(mor_tok.text);
        if (!f)
            semantic_fail("UnresolvedReference", mor_tok,
                          "'" + mor_tok.text + "' is not a morphism of '" + cat.name + "'");
        Id sobj = decl.variance == Variance::Covariant ? f->src : f->tgt;
        Id tobj = decl.variance == Variance::Covariant ? f->tgt : f->src;
        if (cat.is_identity(f->name)) {
            sobj = f->src;
            tobj = f->src;
        }
        std::vector<Id> sfiber = syntactic_fiber(b, sobj);
        std::vector<Id> tfiber = syntactic_fiber(b, tobj);
        const Id sunit = b.identity2.at(b.identity1.at(sobj));
        const Id tunit = b.identity2.at(b.identity1.at(tobj));

        std::map<Id, Id> canonical;
        for (const auto& [x, y] : row) {
            if (std::find(sfiber.begin(), sfiber.end(), x) == sfiber.end())
                semantic_fail("FiberMismatch", mor_tok,
                              "'" + x + "' is not in the fiber at '" + sobj + "' for morphism '" + f->name + "'");
            if (std::find(tfiber.begin(), tfiber.end(), y) == tfiber.end())
                semantic_fail("FiberMismatch", mor_tok,
                              "'" + y + "' is not in the fiber at '" + tobj + "' for morphism '" + f->name + "'");
            if (x == sunit) {
                if (y != tunit)
                    semantic_fail("FiberMismatch", mor_tok,
                                  "row for '" + f->name + "' must send the unit to the unit");
                continue;  // derivable
            }
            if (cat.is_identity(f->name) && y != x)
                semantic_fail("FiberMismatch", mor_tok,
                              "row for identity '" + f->name + "' must be the identity map");
            canonical[x] = y;
        }
        if (cat.is_identity(f->name)) continue;  // not stored
        for (const auto& x : sfiber)
            if (x != sunit && !canonical.count(x))
                semantic_fail("MissingEntry", mor_tok,
                              "row for '" + f->name + "' has no image for fiber element '" + x + "'");
        if (!canonical.empty()) decl.rows[f->name] = std::move(canonical);
    }

    // every non-identity morphism with a non-trivial source fiber needs a row
    for (const auto& f : cat.morphisms) {
        if (cat.is_identity(f.name)) continue;
        Id sobj = decl.variance == Variance::Covariant ? f.src : f.tgt;
        if (syntactic_fiber(b, sobj).size() > 1 && !decl.rows.count(f.name))
            semantic_fail("MissingEntry", at, "indexing '" + name + "' has no row for morphism '" + f.name + "'");
    }

    w.indexings.emplace(name, std::move(decl));
    w.positions[name] = {at.line, at.col};
}

}  // namespace

Workspace parse_spec(const std::string& text) {
    Parser p{lex(text)};
    Workspace w;
    while (p.peek().kind != Tok::End) {
        if (p.peek().kind != Tok::Ident) p.fail("a declaration keyword");
        const std::string& kw = p.peek().text;
        if (kw == "monoid")
            parse_monoid(p, w);
        else if (kw == "category")
            parse_category(p, w);
        else if (kw == "twocat")
            parse_twocat(p, w);
        else if (kw == "decorated")
            parse_decorated(p, w);
        else if (kw == "indexing")
            parse_indexing(p, w);
        else
            p.fail("one of 'monoid', 'category', 'twocat', 'decorated', 'indexing'");
    }
    return w;
}

// ---------------------------------------------------------------------------
// serializer
// ---------------------------------------------------------------------------

namespace {

void emit_pair_table(std::ostringstream& out, const std::string& keyword,
                     const std::map<std::pair<Id, Id>, Id>& table,
                     const std::function<bool(const std::pair<Id, Id>&)>& derivable) {
    std::vector<std::pair<std::pair<Id, Id>, Id>> rows;
    for (const auto& [key, val] : table)
        if (!derivable(key)) rows.push_back({key, val});
    if (rows.empty()) return;
    std::sort(rows.begin(), rows.end());
    out << "  " << keyword << " {\n";
    for (const auto& [key, val] : rows)
        out << "    (" << key.first << "," << key.second << ")->" << val << ";\n";
    out << "  }\n";
}

}  // namespace

std::string serialize(const Workspace& w) {
    std::ostringstream out;
    bool first = true;
    auto gap = [&] {
        if (!first) out << "\n";
        first = false;
    };

    for (const auto& [name, m] : w.monoids) {
        gap();
        out << "monoid " << name << " {\n  elements";
        for (const auto& e : m.elements) out << " " << e;
        out << ";\n  unit " << m.unit << ";\n  op {\n";
        std::vector<std::pair<std::pair<Id, Id>, Id>> rows;
        for (std::size_t i = 0; i < m.elements.size(); ++i)
            for (std::size_t j = 0; j < m.elements.size(); ++j)
                rows.push_back({{m.elements[i], m.elements[j]}, m.op[i][j]});
        std::sort(rows.begin(), rows.end());
        for (const auto& [key, val] : rows) out << "    (" << key.first << "," << key.second << ")->" << val << ";\n";
        out << "  }\n}\n";
    }

    for (const auto& [name, c] : w.categories) {
        gap();
        out << "category " << name << " {\n  obj";
        for (const auto& o : c.objects) out << " " << o;
        out << ";\n";
        for (const auto& m : c.morphisms)
            if (!c.is_identity(m.name)) out << "  mor " << m.name << ": " << m.src << "->" << m.tgt << ";\n";
        emit_pair_table(out, "comp", c.comp,
                        [&](const std::pair<Id, Id>& key) { return c.is_identity(key.first) || c.is_identity(key.second); });
        out << "}\n";
    }

    for (const auto& [name, b] : w.twocats) {
        gap();
        out << "twocat " << name << " {\n  obj";
        for (const auto& z : b.zerocells) out << " " << z;
        out << ";\n";
        auto is_id1 = [&](const Id& n) {
            for (const auto& [a, idc] : b.identity1)
                if (idc == n) return true;
            return false;
        };
        auto is_hunit = [&](const Id& n) {
            for (const auto& [a, idc] : b.identity1)
                if (b.identity2.at(idc) == n) return true;
            return false;
        };
        for (const auto& c : b.onecells)
            if (!is_id1(c.name)) out << "  cell1 " << c.name << ": " << c.src << "->" << c.tgt << ";\n";
        emit_pair_table(out, "comp1", b.comp1,
                        [&](const std::pair<Id, Id>& key) { return is_id1(key.first) || is_id1(key.second); });
        for (const auto& c : b.twocells)
            if (!b.is_identity2(c.name)) out << "  cell2 " << c.name << ": " << c.src << "=>" << c.tgt << ";\n";
        emit_pair_table(out, "vcomp", b.vcomp2, [&](const std::pair<Id, Id>& key) {
            return b.is_identity2(key.first) || b.is_identity2(key.second);
        });
        emit_pair_table(out, "hcomp", b.hcomp2, [&](const std::pair<Id, Id>& key) {
            return is_hunit(key.first) || is_hunit(key.second) ||
                   (b.is_identity2(key.first) && b.is_identity2(key.second));
        });
        out << "}\n";
    }

    for (const auto& [name, refs] : w.decorations) {
        gap();
        out << "decorated " << name << " = (" << refs.first << ", " << refs.second << ")\n";
    }

    for (const auto& [name, decl] : w.indexings) {
        gap();
        out << "indexing " << name << " on " << decl.decorated;
        if (decl.variance == Variance::Contravariant) out << " op";
        out << " {\n";
        for (const auto& [mor, row] : decl.rows) {
            out << "  " << mor << " -> {";
            for (const auto& [x, y] : row) out << " " << x << "->" << y << ";";
            out << " };\n";
        }
        out << "}\n";
    }
    return out.str();
}

}  // namespace dct
