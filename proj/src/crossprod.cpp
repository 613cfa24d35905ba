#include "dct/crossprod.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace dct {

const ModelSquare* DoubleCatModel::square(const Id& s) const {
    for (const auto& sq : squares)
        if (sq.id == s) return &sq;
    return nullptr;
}

namespace {

// Plain union-find over pair indices.
struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

CrossedProduct::CrossedProduct(Pi2Indexing phi) : phi_(std::move(phi)) {
    const FinCategory& bstar = phi_.base.vertical;
    const Fin2Category& b = phi_.base.horizontal;

    for (const auto& a : bstar.objects) fibers_.emplace(a, pi2(b, a));

    std::map<Id, std::size_t> cell_index;
    for (std::size_t i = 0; i < b.twocells.size(); ++i) cell_index[b.twocells[i].name] = i;

    // Sliding orbits per non-identity frame.
    for (const auto& f : bstar.morphisms) {
        if (bstar.is_identity(f.name)) continue;
        const Id& ida = b.identity1.at(f.src);
        const Id& idb = b.identity1.at(f.tgt);

        std::vector<Id> ups, downs;
        for (const auto& c : b.twocells) {
            if (c.tgt == ida) ups.push_back(c.name);
            if (c.src == idb) downs.push_back(c.name);
        }

        std::vector<std::pair<Id, Id>> pairs;
        std::map<std::pair<Id, Id>, std::size_t> pos;
        for (const auto& u : ups)
            for (const auto& d : downs) {
                pos[{u, d}] = pairs.size();
                pairs.emplace_back(u, d);
            }

        UnionFind uf(pairs.size());
        const MonoidHom& act = action_of(phi_, f.name);
        const std::vector<Id>& nus = phi_.variance == Variance::Covariant
                                         ? fibers_.at(f.src).monoid.elements
                                         : fibers_.at(f.tgt).monoid.elements;
        for (const auto& [u, d] : pairs)
            for (const auto& nu : nus) {
                std::pair<Id, Id> lhs, rhs;
                if (phi_.variance == Variance::Covariant) {
                    // (nu after up, down) ~ (up, down after act(nu))
                    lhs = {b.vcomp2.at({nu, u}), d};
                    rhs = {u, b.vcomp2.at({d, act.apply(nu)})};
                } else {
                    // (up, down after nu) ~ (act(nu) after up, down)
                    lhs = {u, b.vcomp2.at({d, nu})};
                    rhs = {b.vcomp2.at({act.apply(nu), u}), d};
                }
                uf.unite(pos.at(lhs), pos.at(rhs));
            }

        // Canonical representative: minimal (up, down) in cell-table order.
        std::map<std::size_t, std::pair<Id, Id>> reps;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            std::size_t root = uf.find(i);
            auto key = std::make_pair(cell_index.at(pairs[i].first), cell_index.at(pairs[i].second));
            auto it = reps.find(root);
            if (it == reps.end() ||
                key < std::make_pair(cell_index.at(it->second.first), cell_index.at(it->second.second)))
                reps[root] = pairs[i];
        }
        auto& table = canon_[f.name];
        for (std::size_t i = 0; i < pairs.size(); ++i) table[pairs[i]] = reps.at(uf.find(i));
    }

    // ---- assemble the model ----
    model_.object_category = bstar;
    model_.horizontal_name = b.name;
    model_.onecells = b.onecells;
    model_.identity1 = b.identity1;
    model_.comp1 = b.comp1;

    for (const auto& c : b.twocells) {
        ModelSquare ms;
        ms.id = c.name;
        ms.sq = Square::globular(c.name);
        ms.top = c.src;
        ms.bottom = c.tgt;
        ms.left = bstar.identities.at(b.onecell(c.src)->src);
        ms.right = bstar.identities.at(b.onecell(c.src)->tgt);
        model_.squares.push_back(std::move(ms));
    }
    for (const auto& f : bstar.morphisms) {
        if (bstar.is_identity(f.name)) continue;
        std::set<std::pair<std::size_t, std::size_t>> seen;
        for (const auto& [pair, rep] : canon_.at(f.name))
            seen.insert({cell_index.at(rep.first), cell_index.at(rep.second)});
        for (const auto& [ui, di] : seen) {
            const Id& u = b.twocells[ui].name;
            const Id& d = b.twocells[di].name;
            ModelSquare ms;
            ms.id = u + "|" + f.name + "|" + d;
            ms.sq = Square::framed(u, f.name, d);
            ms.top = b.twocell(u)->src;
            ms.bottom = b.twocell(d)->tgt;
            ms.left = f.name;
            ms.right = f.name;
            model_.squares.push_back(std::move(ms));
        }
    }

    for (const auto& c : b.onecells) model_.identity_square[c.name] = b.identity2.at(c.name);
    for (const auto& f : bstar.morphisms) model_.unit[f.name] = unit_square(f.name).id();

    for (const auto& first : model_.squares)
        for (const auto& second : model_.squares) {
            if (first.bottom != second.top) continue;
            model_.vcomp[{second.id, first.id}] = vcomp_squares(second.sq, first.sq).id();
        }
    for (const auto& left : model_.squares)
        for (const auto& right : model_.squares) {
            if (left.right != right.left) continue;
            model_.hcomp[{left.id, right.id}] = hcomp_squares(left.sq, right.sq).id();
        }
}

Square CrossedProduct::reduce(Id up, const Id& frame, Id down) const {
    const Fin2Category& b = phi_.base.horizontal;
    if (phi_.base.vertical.is_identity(frame)) {
        // A triple over an identity frame is the plain vertical composite
        // of its globular parts.
        return Square::globular(b.vcomp2.at({down, up}));
    }
    const auto& table = canon_.at(frame);
    auto it = table.find({up, down});
    if (it == table.end())
        throw Error("UnknownMorphism", "no square (" + up + "," + frame + "," + down + ") in the crossed product");
    return Square::framed(it->second.first, frame, it->second.second);
}

Square CrossedProduct::canonicalize(const Square& s) const {
    if (s.kind == Square::Kind::Globular) {
        if (!phi_.base.horizontal.twocell(s.cell))
            throw Error("UnknownMorphism", "'" + s.cell + "' is not a 2-cell of '" + phi_.base.horizontal.name + "'");
        return s;
    }
    return reduce(s.up, s.frame, s.down);
}

std::pair<Id, Id> CrossedProduct::boundary1(const Square& s) const {
    const Fin2Category& b = phi_.base.horizontal;
    if (s.kind == Square::Kind::Globular) return {b.twocell(s.cell)->src, b.twocell(s.cell)->tgt};
    return {b.twocell(s.up)->src, b.twocell(s.down)->tgt};
}

Square CrossedProduct::vcomp_squares(const Square& second, const Square& first) const {
    const Fin2Category& b = phi_.base.horizontal;
    const FinCategory& bstar = phi_.base.vertical;

    auto [ftop, fbot] = boundary1(first);
    auto [stop, sbot] = boundary1(second);
    if (fbot != stop)
        throw Error("NotComposable", "bottom 1-cell '" + fbot + "' of the first square differs from top 1-cell '" +
                                         stop + "' of the second");

    if (first.kind == Square::Kind::Globular && second.kind == Square::Kind::Globular)
        return Square::globular(b.vcomp2.at({second.cell, first.cell}));

    if (first.kind == Square::Kind::Globular) {
        // absorb the top globular cell into the up component
        return reduce(b.vcomp2.at({second.up, first.cell}), second.frame, second.down);
    }
    if (second.kind == Square::Kind::Globular) {
        // absorb the bottom globular cell into the down component
        return reduce(first.up, first.frame, b.vcomp2.at({second.cell, first.down}));
    }

    const Id& f = first.frame;
    const Id& g = second.frame;
    auto it = bstar.comp.find({g, f});
    if (it == bstar.comp.end())
        throw Error("NotComposable", "frames '" + f + "' and '" + g + "' do not compose");
    const Id middle = b.vcomp2.at({second.up, first.down});
    if (phi_.variance == Variance::Covariant) {
        const Id slid = action_of(phi_, g).apply(middle);
        return reduce(first.up, it->second, b.vcomp2.at({second.down, slid}));
    }
    const Id slid = action_of(phi_, f).apply(middle);
    return reduce(b.vcomp2.at({slid, first.up}), it->second, second.down);
}

Square CrossedProduct::hcomp_squares(const Square& left, const Square& right) const {
    const Fin2Category& b = phi_.base.horizontal;

    if (left.kind == Square::Kind::Globular && right.kind == Square::Kind::Globular) {
        if (b.tgt0_of2(left.cell) != b.src0_of2(right.cell))
            throw Error("FrameMismatch", "globular squares '" + left.cell + "' and '" + right.cell +
                                             "' do not share a corner");
        return Square::globular(b.hcomp2.at({left.cell, right.cell}));
    }
    if (left.kind != right.kind)
        throw Error("FrameMismatch", "an identity frame cannot match a non-identity frame");
    if (left.frame != right.frame)
        throw Error("FrameMismatch", "frames '" + left.frame + "' and '" + right.frame + "' differ");
    return reduce(b.hcomp2.at({left.up, right.up}), left.frame, b.hcomp2.at({left.down, right.down}));
}

Square CrossedProduct::unit_square(const Id& f) const {
    const FinCategory& bstar = phi_.base.vertical;
    const Fin2Category& b = phi_.base.horizontal;
    const FinMorphism* m = bstar.morphism(f);
    if (!m) throw Error("UnknownMorphism", "'" + f + "' is not a morphism of '" + bstar.name + "'");
    const Id& u = b.identity2.at(b.identity1.at(m->src));
    const Id& d = b.identity2.at(b.identity1.at(m->tgt));
    if (bstar.is_identity(f)) return Square::globular(u);
    return reduce(u, f, d);
}

bool CrossedProduct::square_equal(const Square& s, const Square& t) const {
    return canonicalize(s) == canonicalize(t);
}

std::vector<Square> CrossedProduct::canonical_decomposition(const Square& s) const {
    Square c = canonicalize(s);
    if (c.kind == Square::Kind::Globular) return {c};
    return {Square::globular(c.up), unit_square(c.frame), Square::globular(c.down)};
}

std::vector<Square> CrossedProduct::sliding_variants(const Square& s) const {
    if (s.kind != Square::Kind::Framed) return {};
    const Fin2Category& b = phi_.base.horizontal;
    const FinMorphism* f = phi_.base.vertical.morphism(s.frame);
    const MonoidHom& act = action_of(phi_, s.frame);
    const Id& ida = b.identity1.at(f->src);
    const Id& idb = b.identity1.at(f->tgt);
    std::vector<Id> ups, downs;
    for (const auto& c : b.twocells) {
        if (c.tgt == ida) ups.push_back(c.name);
        if (c.src == idb) downs.push_back(c.name);
    }

    // Instantiate the square as either side of the one-step relation and
    // emit the other side, over all decompositions of its up or down cell.
    std::vector<Square> out;
    const std::vector<Id>& nus = phi_.variance == Variance::Covariant ? fibers_.at(f->src).monoid.elements
                                                                      : fibers_.at(f->tgt).monoid.elements;
    for (const auto& nu : nus) {
        if (phi_.variance == Variance::Covariant) {
            for (const auto& x : ups)
                if (b.vcomp2.at({nu, x}) == s.up)
                    out.push_back(Square::framed(x, s.frame, b.vcomp2.at({s.down, act.apply(nu)})));
            for (const auto& x : downs)
                if (b.vcomp2.at({x, act.apply(nu)}) == s.down)
                    out.push_back(Square::framed(b.vcomp2.at({nu, s.up}), s.frame, x));
        } else {
            for (const auto& x : downs)
                if (b.vcomp2.at({x, nu}) == s.down)
                    out.push_back(Square::framed(b.vcomp2.at({act.apply(nu), s.up}), s.frame, x));
            for (const auto& x : ups)
                if (b.vcomp2.at({act.apply(nu), x}) == s.up)
                    out.push_back(Square::framed(x, s.frame, b.vcomp2.at({s.down, nu})));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// axiom checking on materialized models
// ---------------------------------------------------------------------------

namespace {

const OneCell* model_onecell(const DoubleCatModel& m, const Id& c) {
    for (const auto& cell : m.onecells)
        if (cell.name == c) return &cell;
    return nullptr;
}

}  // namespace

ValidationReport check_double_axioms(const DoubleCatModel& m) {
    ValidationReport rep;

    rep.merge(validate_category(m.object_category));

    // 1-cell skeleton
    std::set<Id> zeros(m.object_category.objects.begin(), m.object_category.objects.end());
    for (const auto& c : m.onecells)
        if (!zeros.count(c.src) || !zeros.count(c.tgt))
            rep.add("UnknownObject", "1-cell '" + c.name + "' has an undeclared boundary");
    for (const auto& a : m.object_category.objects) {
        auto it = m.identity1.find(a);
        if (it == m.identity1.end()) {
            rep.add("MissingIdentity", "object '" + a + "' has no identity 1-cell");
            continue;
        }
        const OneCell* c = model_onecell(m, it->second);
        if (!c || c->src != a || c->tgt != a)
            rep.add("BadIdentity", "identity 1-cell of '" + a + "' is missing or not an endocell");
    }
    if (!rep.ok()) return rep;
    for (const auto& g : m.onecells)
        for (const auto& f : m.onecells) {
            bool composable = (f.tgt == g.src);
            auto it = m.comp1.find({g.name, f.name});
            if (composable && it == m.comp1.end())
                rep.add("MissingComposite", "no 1-cell composite " + g.name + " after " + f.name);
            if (!composable && it != m.comp1.end())
                rep.add("SpuriousComposite", "comp1 entry (" + g.name + "," + f.name + ") is not composable");
            if (composable && it != m.comp1.end() && !model_onecell(m, it->second))
                rep.add("UnknownMorphism", "comp1 result '" + it->second + "' is undeclared");
        }
    if (!rep.ok()) return rep;
    for (const auto& f : m.onecells)
        if (m.comp1.at({f.name, m.identity1.at(f.src)}) != f.name ||
            m.comp1.at({m.identity1.at(f.tgt), f.name}) != f.name)
            rep.add("unit1", "1-cell '" + f.name + "' is not strictly unital");
    for (const auto& h : m.onecells)
        for (const auto& g : m.onecells) {
            if (g.tgt != h.src) continue;
            for (const auto& f : m.onecells) {
                if (f.tgt != g.src) continue;
                if (m.comp1.at({m.comp1.at({h.name, g.name}), f.name}) !=
                    m.comp1.at({h.name, m.comp1.at({g.name, f.name})}))
                    rep.add("assoc1", "1-cell associativity fails at (" + h.name + "," + g.name + "," + f.name + ")");
            }
        }

    // square boundaries and corner consistency
    std::set<Id> square_ids;
    for (const auto& s : m.squares) {
        if (!square_ids.insert(s.id).second) rep.add("DuplicateName", "square '" + s.id + "' declared twice");
        const OneCell* top = model_onecell(m, s.top);
        const OneCell* bot = model_onecell(m, s.bottom);
        const FinMorphism* lf = m.object_category.morphism(s.left);
        const FinMorphism* rf = m.object_category.morphism(s.right);
        if (!top || !bot || !lf || !rf) {
            rep.add("UnknownMorphism", "square '" + s.id + "' has an undeclared boundary component");
            continue;
        }
        if (lf->src != top->src || lf->tgt != bot->src || rf->src != top->tgt || rf->tgt != bot->tgt)
            rep.add("BadBoundary", "square '" + s.id + "' has inconsistent corners");
    }
    if (!rep.ok()) return rep;

    // the category of squares under vertical composition
    FinCategory sqcat;
    sqcat.name = "squares";
    for (const auto& c : m.onecells) sqcat.objects.push_back(c.name);
    for (const auto& s : m.squares) sqcat.morphisms.push_back({s.id, s.top, s.bottom});
    sqcat.identities = m.identity_square;
    sqcat.comp = m.vcomp;
    rep.merge(validate_category(sqcat));
    if (!rep.ok()) return rep;

    auto sq = [&](const Id& id) -> const ModelSquare& { return *m.square(id); };

    // frame functors under vertical composition
    for (const auto& [pair, r] : m.vcomp) {
        const ModelSquare& second = sq(pair.first);
        const ModelSquare& first = sq(pair.second);
        if (sq(r).left != m.object_category.comp.at({second.left, first.left}) ||
            sq(r).right != m.object_category.comp.at({second.right, first.right}))
            rep.add("frame", "frames of the vertical composite (" + pair.first + "," + pair.second +
                                 ") are not the composites of the frames");
    }
    for (const auto& [cell, s] : m.identity_square) {
        const OneCell* c = model_onecell(m, cell);
        if (sq(s).left != m.object_category.identities.at(c->src) ||
            sq(s).right != m.object_category.identities.at(c->tgt))
            rep.add("frame", "identity square of '" + cell + "' has non-identity frames");
    }

    // unit functor
    for (const auto& f : m.object_category.morphisms) {
        auto it = m.unit.find(f.name);
        if (it == m.unit.end()) {
            rep.add("MissingEntry", "no unit square for morphism '" + f.name + "'");
            continue;
        }
        const ModelSquare& u = sq(it->second);
        if (u.left != f.name || u.right != f.name)
            rep.add("unitFrame", "unit square of '" + f.name + "' does not have it as both frames");
        if (u.top != m.identity1.at(f.src) || u.bottom != m.identity1.at(f.tgt))
            rep.add("unitFrame", "unit square of '" + f.name + "' has wrong horizontal boundary");
    }
    if (!rep.ok()) return rep;
    for (const auto& [pair, gf] : m.object_category.comp)
        if (m.unit.at(gf) != m.vcomp.at({m.unit.at(pair.first), m.unit.at(pair.second)}))
            rep.add("unitFunctor", "unit of '" + gf + "' is not the composite of the units of '" + pair.first +
                                       "' and '" + pair.second + "'");
    for (const auto& [obj, idm] : m.object_category.identities)
        if (m.unit.at(idm) != m.identity_square.at(m.identity1.at(obj)))
            rep.add("unitFunctor", "unit of identity '" + idm + "' is not the identity square");

    // horizontal composition: exactness, boundaries, frames
    for (const auto& s : m.squares)
        for (const auto& t : m.squares) {
            bool composable = (s.right == t.left);
            auto it = m.hcomp.find({s.id, t.id});
            if (composable && it == m.hcomp.end())
                rep.add("MissingComposite", "no horizontal composite of " + s.id + " then " + t.id);
            if (!composable && it != m.hcomp.end())
                rep.add("SpuriousComposite", "hcomp entry (" + s.id + "," + t.id + ") is not composable");
            if (composable && it != m.hcomp.end()) {
                if (!m.square(it->second)) {
                    rep.add("UnknownMorphism", "hcomp result '" + it->second + "' is undeclared");
                    continue;
                }
                const ModelSquare& r = sq(it->second);
                if (r.left != s.left || r.right != t.right)
                    rep.add("frame", "hcomp (" + s.id + "," + t.id + ") breaks the frame condition");
                if (r.top != m.comp1.at({t.top, s.top}) || r.bottom != m.comp1.at({t.bottom, s.bottom}))
                    rep.add("BadBoundary", "hcomp (" + s.id + "," + t.id + ") has wrong horizontal boundary");
            }
        }
    if (!rep.ok()) return rep;

    // horizontal units and associativity
    for (const auto& s : m.squares) {
        if (m.hcomp.at({m.unit.at(s.left), s.id}) != s.id || m.hcomp.at({s.id, m.unit.at(s.right)}) != s.id)
            rep.add("unitH", "square '" + s.id + "' is not unital under unit squares");
    }
    for (const auto& s : m.squares)
        for (const auto& t : m.squares) {
            if (s.right != t.left) continue;
            for (const auto& u : m.squares) {
                if (t.right != u.left) continue;
                if (m.hcomp.at({m.hcomp.at({s.id, t.id}), u.id}) != m.hcomp.at({s.id, m.hcomp.at({t.id, u.id})}))
                    rep.add("assocH", "horizontal associativity fails at (" + s.id + "," + t.id + "," + u.id + ")");
            }
        }

    // interchange on all composable 2x2 arrangements
    for (const auto& tl : m.squares)
        for (const auto& tr : m.squares) {
            if (tl.right != tr.left) continue;
            for (const auto& bl : m.squares) {
                if (tl.bottom != bl.top) continue;
                for (const auto& br : m.squares) {
                    if (bl.right != br.left) continue;
                    if (tr.bottom != br.top) continue;
                    const Id& rows = m.vcomp.at({m.hcomp.at({bl.id, br.id}), m.hcomp.at({tl.id, tr.id})});
                    const Id& cols = m.hcomp.at({m.vcomp.at({bl.id, tl.id}), m.vcomp.at({br.id, tr.id})});
                    if (rows != cols)
                        rep.add("interchange", "fails at (" + tl.id + "," + tr.id + "," + bl.id + "," + br.id +
                                                   "): " + rows + " != " + cols);
                }
            }
        }
    return rep;
}

DecoratedTwoCat decorated_horizontalization(const DoubleCatModel& m) {
    DecoratedTwoCat d;
    d.vertical = m.object_category;
    d.horizontal.name = m.horizontal_name;
    d.horizontal.zerocells = m.object_category.objects;
    d.horizontal.onecells = m.onecells;
    d.horizontal.identity1 = m.identity1;
    d.horizontal.comp1 = m.comp1;

    std::set<Id> globular;
    for (const auto& s : m.squares)
        if (s.sq.kind == Square::Kind::Globular) {
            d.horizontal.twocells.push_back({s.id, s.top, s.bottom});
            globular.insert(s.id);
        }
    d.horizontal.identity2 = m.identity_square;
    for (const auto& [pair, r] : m.vcomp)
        if (globular.count(pair.first) && globular.count(pair.second)) d.horizontal.vcomp2[pair] = r;
    for (const auto& [pair, r] : m.hcomp)
        if (globular.count(pair.first) && globular.count(pair.second)) d.horizontal.hcomp2[pair] = r;
    return d;
}

}  // namespace dct
