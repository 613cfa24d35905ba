#include "dct/twocat.hpp"

#include <algorithm>
#include <set>

namespace dct {

const OneCell* Fin2Category::onecell(const Id& c) const {
    for (const auto& cell : onecells)
        if (cell.name == c) return &cell;
    return nullptr;
}

const TwoCell* Fin2Category::twocell(const Id& c) const {
    for (const auto& cell : twocells)
        if (cell.name == c) return &cell;
    return nullptr;
}

bool Fin2Category::is_identity2(const Id& c) const {
    for (const auto& [onec, idc] : identity2)
        if (idc == c) return true;
    return false;
}

const Id& Fin2Category::src0_of2(const Id& c) const {
    const TwoCell* t = twocell(c);
    if (!t) throw Error("UnknownMorphism", "'" + c + "' is not a 2-cell of '" + name + "'");
    const OneCell* o = onecell(t->src);
    if (!o) throw Error("UnknownMorphism", "2-cell '" + c + "' sits on undeclared 1-cell '" + t->src + "'");
    return o->src;
}

const Id& Fin2Category::tgt0_of2(const Id& c) const {
    const TwoCell* t = twocell(c);
    if (!t) throw Error("UnknownMorphism", "'" + c + "' is not a 2-cell of '" + name + "'");
    return onecell(t->src)->tgt;
}

namespace {

// 2-cells v-composable: first's target 1-cell is second's source 1-cell.
bool vcomposable(const Fin2Category& b, const TwoCell& second, const TwoCell& first) {
    return first.tgt == second.src;
}

// 2-cells h-composable: right's underlying 1-cells start where left's end.
bool hcomposable(const Fin2Category& b, const TwoCell& left, const TwoCell& right) {
    return b.onecell(left.src)->tgt == b.onecell(right.src)->src;
}

}  // namespace

ValidationReport validate_two_category(const Fin2Category& b) {
    ValidationReport rep;

    std::set<Id> zeros(b.zerocells.begin(), b.zerocells.end());
    if (zeros.size() != b.zerocells.size())
        rep.add("DuplicateName", "2-category '" + b.name + "' declares a repeated 0-cell");

    std::set<Id> ones;
    for (const auto& c : b.onecells) {
        if (!ones.insert(c.name).second)
            rep.add("DuplicateName", "1-cell '" + c.name + "' declared twice in '" + b.name + "'");
        if (!zeros.count(c.src) || !zeros.count(c.tgt))
            rep.add("UnknownObject", "1-cell '" + c.name + "' has an undeclared boundary 0-cell");
    }
    std::set<Id> twos;
    for (const auto& c : b.twocells) {
        if (!twos.insert(c.name).second)
            rep.add("DuplicateName", "2-cell '" + c.name + "' declared twice in '" + b.name + "'");
        const OneCell* s = b.onecell(c.src);
        const OneCell* t = b.onecell(c.tgt);
        if (!s || !t) {
            rep.add("UnknownMorphism", "2-cell '" + c.name + "' has an undeclared boundary 1-cell");
            continue;
        }
        if (s->src != t->src || s->tgt != t->tgt)
            rep.add("BadBoundary", "2-cell '" + c.name + "' is not between parallel 1-cells");
    }
    if (!rep.ok()) return rep;

    // ---- 1-cell layer: a one-object-per-0-cell category under comp1 ----
    for (const auto& a : b.zerocells) {
        auto it = b.identity1.find(a);
        if (it == b.identity1.end()) {
            rep.add("MissingIdentity", "0-cell '" + a + "' has no identity 1-cell");
            continue;
        }
        const OneCell* c = b.onecell(it->second);
        if (!c || c->src != a || c->tgt != a)
            rep.add("BadIdentity", "identity 1-cell of '" + a + "' is missing or not an endocell");
    }
    if (!rep.ok()) return rep;

    for (const auto& g : b.onecells)
        for (const auto& f : b.onecells) {
            bool composable = (f.tgt == g.src);
            auto it = b.comp1.find({g.name, f.name});
            if (composable && it == b.comp1.end())
                rep.add("MissingComposite", "no 1-cell composite " + g.name + " after " + f.name);
            if (!composable && it != b.comp1.end())
                rep.add("SpuriousComposite", "comp1 entry (" + g.name + "," + f.name + ") is not composable");
            if (it != b.comp1.end()) {
                const OneCell* h = b.onecell(it->second);
                if (!h)
                    rep.add("UnknownMorphism", "comp1 (" + g.name + "," + f.name + ") = undeclared '" + it->second + "'");
                else if (composable && (h->src != f.src || h->tgt != g.tgt))
                    rep.add("BadBoundary", "comp1 (" + g.name + "," + f.name + ") has wrong endpoints");
            }
        }
    if (!rep.ok()) return rep;

    for (const auto& f : b.onecells) {
        if (b.comp1.at({f.name, b.identity1.at(f.src)}) != f.name ||
            b.comp1.at({b.identity1.at(f.tgt), f.name}) != f.name)
            rep.add("unit1", "1-cell '" + f.name + "' is not strictly unital under identities");
    }
    for (const auto& h : b.onecells)
        for (const auto& g : b.onecells) {
            if (g.tgt != h.src) continue;
            for (const auto& f : b.onecells) {
                if (f.tgt != g.src) continue;
                if (b.comp1.at({b.comp1.at({h.name, g.name}), f.name}) !=
                    b.comp1.at({h.name, b.comp1.at({g.name, f.name})}))
                    rep.add("assoc1", "1-cell associativity fails at (" + h.name + "," + g.name + "," + f.name + ")");
            }
        }

    // ---- vertical layer ----
    for (const auto& c : b.onecells) {
        auto it = b.identity2.find(c.name);
        if (it == b.identity2.end()) {
            rep.add("MissingIdentity", "1-cell '" + c.name + "' has no identity 2-cell");
            continue;
        }
        const TwoCell* t = b.twocell(it->second);
        if (!t || t->src != c.name || t->tgt != c.name)
            rep.add("BadIdentity", "identity 2-cell of '" + c.name + "' is missing or not an endocell");
    }
    if (!rep.ok()) return rep;

    for (const auto& s : b.twocells)
        for (const auto& f : b.twocells) {
            bool composable = vcomposable(b, s, f);
            auto it = b.vcomp2.find({s.name, f.name});
            if (composable && it == b.vcomp2.end())
                rep.add("MissingComposite", "no vertical composite " + s.name + " after " + f.name);
            if (!composable && it != b.vcomp2.end())
                rep.add("SpuriousComposite", "vcomp entry (" + s.name + "," + f.name + ") is not composable");
            if (it != b.vcomp2.end()) {
                const TwoCell* r = b.twocell(it->second);
                if (!r)
                    rep.add("UnknownMorphism", "vcomp (" + s.name + "," + f.name + ") = undeclared '" + it->second + "'");
                else if (composable && (r->src != f.src || r->tgt != s.tgt))
                    rep.add("BadBoundary", "vcomp (" + s.name + "," + f.name + ") has wrong boundary 1-cells");
            }
        }
    if (!rep.ok()) return rep;

    for (const auto& c : b.twocells) {
        if (b.vcomp2.at({c.name, b.identity2.at(c.src)}) != c.name ||
            b.vcomp2.at({b.identity2.at(c.tgt), c.name}) != c.name)
            rep.add("unitV", "2-cell '" + c.name + "' is not unital under vertical identities");
    }
    for (const auto& h : b.twocells)
        for (const auto& g : b.twocells) {
            if (!vcomposable(b, h, g)) continue;
            for (const auto& f : b.twocells) {
                if (!vcomposable(b, g, f)) continue;
                if (b.vcomp2.at({b.vcomp2.at({h.name, g.name}), f.name}) !=
                    b.vcomp2.at({h.name, b.vcomp2.at({g.name, f.name})}))
                    rep.add("assocV", "vertical associativity fails at (" + h.name + "," + g.name + "," + f.name + ")");
            }
        }

    // ---- horizontal layer ----
    for (const auto& l : b.twocells)
        for (const auto& r : b.twocells) {
            bool composable = hcomposable(b, l, r);
            auto it = b.hcomp2.find({l.name, r.name});
            if (composable && it == b.hcomp2.end())
                rep.add("MissingComposite", "no horizontal composite of " + l.name + " then " + r.name);
            if (!composable && it != b.hcomp2.end())
                rep.add("SpuriousComposite", "hcomp entry (" + l.name + "," + r.name + ") is not composable");
            if (it != b.hcomp2.end() && composable) {
                const TwoCell* res = b.twocell(it->second);
                if (!res) {
                    rep.add("UnknownMorphism", "hcomp (" + l.name + "," + r.name + ") = undeclared '" + it->second + "'");
                    continue;
                }
                const Id want_src = b.comp1.at({b.twocell(r.name)->src, b.twocell(l.name)->src});
                const Id want_tgt = b.comp1.at({b.twocell(r.name)->tgt, b.twocell(l.name)->tgt});
                if (res->src != want_src || res->tgt != want_tgt)
                    rep.add("BadBoundary", "hcomp (" + l.name + "," + r.name + ") has wrong boundary 1-cells");
            }
        }
    if (!rep.ok()) return rep;

    // strict horizontal units: identity 2-cells of identity 1-cells
    for (const auto& c : b.twocells) {
        const Id& a = b.src0_of2(c.name);
        const Id& z = b.tgt0_of2(c.name);
        if (b.hcomp2.at({b.identity2.at(b.identity1.at(a)), c.name}) != c.name ||
            b.hcomp2.at({c.name, b.identity2.at(b.identity1.at(z))}) != c.name)
            rep.add("unitH", "2-cell '" + c.name + "' is not strictly unital under horizontal identities");
    }
    for (const auto& f : b.twocells)
        for (const auto& g : b.twocells) {
            if (!hcomposable(b, f, g)) continue;
            for (const auto& h : b.twocells) {
                if (!hcomposable(b, g, h)) continue;
                if (b.hcomp2.at({b.hcomp2.at({f.name, g.name}), h.name}) !=
                    b.hcomp2.at({f.name, b.hcomp2.at({g.name, h.name})}))
                    rep.add("assocH", "horizontal associativity fails at (" + f.name + "," + g.name + "," + h.name + ")");
            }
        }

    // hcomp of identity 2-cells is the identity 2-cell of the composite 1-cell
    for (const auto& f : b.onecells)
        for (const auto& g : b.onecells) {
            if (f.tgt != g.src) continue;
            const Id& lhs = b.hcomp2.at({b.identity2.at(f.name), b.identity2.at(g.name)});
            if (lhs != b.identity2.at(b.comp1.at({g.name, f.name})))
                rep.add("unitH", "hcomp of identities of '" + f.name + "' and '" + g.name +
                                     "' is not an identity 2-cell");
        }

    // interchange on all composable 2x2 arrangements
    for (const auto& tl : b.twocells)
        for (const auto& bl : b.twocells) {
            if (!vcomposable(b, bl, tl)) continue;
            for (const auto& tr : b.twocells) {
                if (!hcomposable(b, tl, tr)) continue;
                for (const auto& br : b.twocells) {
                    if (!vcomposable(b, br, tr)) continue;
                    if (!hcomposable(b, bl, br)) continue;
                    const Id& rows = b.vcomp2.at({b.hcomp2.at({bl.name, br.name}), b.hcomp2.at({tl.name, tr.name})});
                    const Id& cols = b.hcomp2.at({b.vcomp2.at({bl.name, tl.name}), b.vcomp2.at({br.name, tr.name})});
                    if (rows != cols)
                        rep.add("interchange", "fails at quadruple (" + tl.name + "," + tr.name + "," + bl.name +
                                                   "," + br.name + "): " + rows + " != " + cols);
                }
            }
        }
    return rep;
}

Pi2Fiber pi2(const Fin2Category& b, const Id& a) {
    if (std::find(b.zerocells.begin(), b.zerocells.end(), a) == b.zerocells.end())
        throw Error("UnknownObject", "'" + a + "' is not a 0-cell of '" + b.name + "'");
    const Id& ida = b.identity1.at(a);
    const Id& unit = b.identity2.at(ida);

    std::vector<Id> cells;
    for (const auto& c : b.twocells)
        if (c.src == ida && c.tgt == ida) cells.push_back(c.name);

    // Vertical and horizontal composition must agree on the fiber, and the
    // shared operation must be commutative; otherwise the tables cannot
    // describe a strict 2-category.
    for (const auto& x : cells)
        for (const auto& y : cells) {
            auto v = b.vcomp2.find({y, x});
            auto h = b.hcomp2.find({x, y});
            if (v == b.vcomp2.end() || h == b.hcomp2.end())
                throw Error("EckmannHiltonViolation",
                            "fiber at '" + a + "': composite of (" + x + "," + y + ") is missing");
            if (v->second != h->second)
                throw Error("EckmannHiltonViolation", "fiber at '" + a + "': vertical and horizontal composites of (" +
                                                          x + "," + y + ") differ: " + v->second + " vs " + h->second);
            if (b.vcomp2.at({y, x}) != b.vcomp2.at({x, y}))
                throw Error("EckmannHiltonViolation",
                            "fiber at '" + a + "': composition is not commutative on (" + x + "," + y + ")");
        }

    Pi2Fiber fiber;
    fiber.object = a;
    fiber.monoid.name = "pi2(" + b.name + "," + a + ")";
    fiber.monoid.elements = cells;
    fiber.monoid.unit = unit;
    fiber.monoid.op.resize(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        fiber.monoid.op[i].resize(cells.size());
        for (std::size_t j = 0; j < cells.size(); ++j)
            fiber.monoid.op[i][j] = b.vcomp2.at({cells[j], cells[i]});
    }
    for (const auto& c : cells) fiber.embedding[c] = c;

    ValidationReport rep = validate_monoid(fiber.monoid);
    if (!rep.ok())
        throw Error("EckmannHiltonViolation", "fiber at '" + a + "' is not a commutative monoid:\n" + rep.to_string());
    return fiber;
}

ValidationReport validate_decoration(const DecoratedTwoCat& d) {
    ValidationReport rep;
    std::set<Id> vo(d.vertical.objects.begin(), d.vertical.objects.end());
    std::set<Id> ho(d.horizontal.zerocells.begin(), d.horizontal.zerocells.end());
    for (const auto& o : vo)
        if (!ho.count(o))
            rep.add("ObjectMismatch", "object '" + o + "' of '" + d.vertical.name + "' is not a 0-cell of '" +
                                          d.horizontal.name + "'");
    for (const auto& o : ho)
        if (!vo.count(o))
            rep.add("ObjectMismatch", "0-cell '" + o + "' of '" + d.horizontal.name + "' is not an object of '" +
                                          d.vertical.name + "'");
    return rep;
}

}  // namespace dct
