#include "dct/core.hpp"

#include <algorithm>
#include <set>

namespace dct {

const Id& FinCommMonoid::apply(const Id& x, const Id& y) const {
    auto i = index_of(x);
    auto j = index_of(y);
    if (!i) throw Error("UnknownElement", "'" + x + "' is not an element of monoid '" + name + "'");
    if (!j) throw Error("UnknownElement", "'" + y + "' is not an element of monoid '" + name + "'");
    return op[*i][*j];
}

const Id& MonoidHom::apply(const Id& x) const {
    auto i = source.index_of(x);
    if (!i) throw Error("UnknownElement", "'" + x + "' is not an element of monoid '" + source.name + "'");
    return map[*i];
}

const FinMorphism* FinCategory::morphism(const Id& m) const {
    for (const auto& mor : morphisms)
        if (mor.name == m) return &mor;
    return nullptr;
}

bool FinCategory::is_identity(const Id& m) const {
    for (const auto& [obj, id_m] : identities)
        if (id_m == m) return true;
    return false;
}

const Id& FinCategory::compose(const Id& g, const Id& f) const {
    if (!morphism(g)) throw Error("UnknownMorphism", "'" + g + "' is not a morphism of '" + name + "'");
    if (!morphism(f)) throw Error("UnknownMorphism", "'" + f + "' is not a morphism of '" + name + "'");
    auto it = comp.find({g, f});
    if (it == comp.end())
        throw Error("NotComposable", "no composite " + g + " after " + f + " in '" + name + "'");
    return it->second;
}

ValidationReport validate_monoid(const FinCommMonoid& m) {
    ValidationReport rep;

    std::set<Id> declared(m.elements.begin(), m.elements.end());
    if (declared.size() != m.elements.size())
        rep.add("DuplicateElement", "monoid '" + m.name + "' declares a repeated element");
    if (!declared.count(m.unit))
        rep.add("UnknownElement", "unit '" + m.unit + "' of monoid '" + m.name + "' is not declared");

    const std::size_t n = m.elements.size();
    if (m.op.size() != n) {
        rep.add("MissingEntry", "op table of '" + m.name + "' has " + std::to_string(m.op.size()) +
                                    " rows for " + std::to_string(n) + " elements");
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (m.op[i].size() != n) {
            rep.add("MissingEntry", "op row for '" + m.elements[i] + "' in '" + m.name + "' is not total");
            return rep;
        }
        for (std::size_t j = 0; j < n; ++j)
            if (!declared.count(m.op[i][j]))
                rep.add("UnknownElement", "op(" + m.elements[i] + "," + m.elements[j] + ") = '" +
                                              m.op[i][j] + "' is not declared in '" + m.name + "'");
    }
    if (!rep.ok()) return rep;  // law checks need resolvable entries

    auto at = [&](std::size_t i, std::size_t j) -> const Id& { return m.op[i][j]; };
    auto idx = [&](const Id& e) { return *m.index_of(e); };

    const std::size_t u = idx(m.unit);
    for (std::size_t i = 0; i < n; ++i) {
        if (at(i, u) != m.elements[i])
            rep.add("unit", "op(" + m.elements[i] + "," + m.unit + ") = " + at(i, u) + " in '" + m.name + "'");
        if (at(u, i) != m.elements[i])
            rep.add("unit", "op(" + m.unit + "," + m.elements[i] + ") = " + at(u, i) + " in '" + m.name + "'");
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (at(i, j) != at(j, i))
                rep.add("comm", "op(" + m.elements[i] + "," + m.elements[j] + ") != op(" +
                                    m.elements[j] + "," + m.elements[i] + ") in '" + m.name + "'");
            for (std::size_t k = 0; k < n; ++k) {
                const Id& lhs = at(idx(at(i, j)), k);
                const Id& rhs = at(i, idx(at(j, k)));
                if (lhs != rhs)
                    rep.add("assoc", "((" + m.elements[i] + "," + m.elements[j] + ")," + m.elements[k] +
                                         "): " + lhs + " != " + rhs + " in '" + m.name + "'");
            }
        }
    return rep;
}

ValidationReport validate_category(const FinCategory& c) {
    ValidationReport rep;

    std::set<Id> objs(c.objects.begin(), c.objects.end());
    if (objs.size() != c.objects.size())
        rep.add("DuplicateName", "category '" + c.name + "' declares a repeated object");

    std::set<Id> mors;
    for (const auto& m : c.morphisms) {
        if (!mors.insert(m.name).second)
            rep.add("DuplicateName", "category '" + c.name + "' declares morphism '" + m.name + "' twice");
        if (!objs.count(m.src))
            rep.add("UnknownObject", "morphism '" + m.name + "' has undeclared source '" + m.src + "'");
        if (!objs.count(m.tgt))
            rep.add("UnknownObject", "morphism '" + m.name + "' has undeclared target '" + m.tgt + "'");
    }
    if (!rep.ok()) return rep;

    for (const auto& o : c.objects) {
        auto it = c.identities.find(o);
        if (it == c.identities.end()) {
            rep.add("MissingIdentity", "object '" + o + "' of '" + c.name + "' has no identity");
            continue;
        }
        const FinMorphism* m = c.morphism(it->second);
        if (!m)
            rep.add("UnknownMorphism", "identity of '" + o + "' names undeclared morphism '" + it->second + "'");
        else if (m->src != o || m->tgt != o)
            rep.add("BadIdentity", "identity '" + m->name + "' of '" + o + "' is not an endomorphism of it");
    }
    for (const auto& [obj, idm] : c.identities)
        if (!objs.count(obj))
            rep.add("UnknownObject", "identity table of '" + c.name + "' mentions undeclared object '" + obj + "'");
    if (!rep.ok()) return rep;

    // comp defined exactly on composable pairs, with matching boundaries
    for (const auto& g : c.morphisms)
        for (const auto& f : c.morphisms) {
            bool composable = (f.tgt == g.src);
            auto it = c.comp.find({g.name, f.name});
            if (composable && it == c.comp.end())
                rep.add("MissingComposite", "no entry for " + g.name + " after " + f.name + " in '" + c.name + "'");
            if (!composable && it != c.comp.end())
                rep.add("SpuriousComposite",
                        "entry (" + g.name + "," + f.name + ") composes non-composable morphisms");
            if (it != c.comp.end()) {
                const FinMorphism* h = c.morphism(it->second);
                if (!h)
                    rep.add("UnknownMorphism", "composite (" + g.name + "," + f.name + ") = undeclared '" +
                                                   it->second + "'");
                else if (composable && (h->src != f.src || h->tgt != g.tgt))
                    rep.add("BadBoundary", "composite " + it->second + " of (" + g.name + "," + f.name +
                                               ") has wrong endpoints");
            }
        }
    for (const auto& [key, val] : c.comp)
        if (!c.morphism(key.first) || !c.morphism(key.second))
            rep.add("UnknownMorphism", "comp table of '" + c.name + "' mentions undeclared morphism");
    if (!rep.ok()) return rep;

    for (const auto& f : c.morphisms) {
        const Id& ids = c.identities.at(f.src);
        const Id& idt = c.identities.at(f.tgt);
        if (c.comp.at({f.name, ids}) != f.name)
            rep.add("identity", f.name + " after " + ids + " != " + f.name + " in '" + c.name + "'");
        if (c.comp.at({idt, f.name}) != f.name)
            rep.add("identity", idt + " after " + f.name + " != " + f.name + " in '" + c.name + "'");
    }
    for (const auto& h : c.morphisms)
        for (const auto& g : c.morphisms) {
            if (g.tgt != h.src) continue;
            for (const auto& f : c.morphisms) {
                if (f.tgt != g.src) continue;
                const Id& lhs = c.comp.at({c.comp.at({h.name, g.name}), f.name});
                const Id& rhs = c.comp.at({h.name, c.comp.at({g.name, f.name})});
                if (lhs != rhs)
                    rep.add("assoc", "(" + h.name + "," + g.name + "," + f.name + "): " + lhs + " != " + rhs +
                                         " in '" + c.name + "'");
            }
        }
    return rep;
}

ValidationReport validate_functor(const CatFunctor& F) {
    ValidationReport rep;
    for (const auto& o : F.source.objects) {
        auto it = F.object_map.find(o);
        if (it == F.object_map.end()) {
            rep.add("MissingEntry", "functor lacks an image for object '" + o + "'");
            continue;
        }
        if (std::find(F.target.objects.begin(), F.target.objects.end(), it->second) == F.target.objects.end())
            rep.add("UnknownObject", "image '" + it->second + "' of object '" + o + "' is not in the target");
    }
    for (const auto& m : F.source.morphisms) {
        auto it = F.morphism_map.find(m.name);
        if (it == F.morphism_map.end()) {
            rep.add("MissingEntry", "functor lacks an image for morphism '" + m.name + "'");
            continue;
        }
        const FinMorphism* im = F.target.morphism(it->second);
        if (!im) {
            rep.add("UnknownMorphism", "image '" + it->second + "' of '" + m.name + "' is not in the target");
            continue;
        }
        if (im->src != F.object_map.at(m.src) || im->tgt != F.object_map.at(m.tgt))
            rep.add("BadBoundary", "functor breaks source/target at morphism '" + m.name + "'");
    }
    if (!rep.ok()) return rep;

    for (const auto& [obj, idm] : F.source.identities)
        if (F.morphism_map.at(idm) != F.target.identities.at(F.object_map.at(obj)))
            rep.add("identity", "functor does not preserve the identity of '" + obj + "'");
    for (const auto& [pair, gf] : F.source.comp) {
        const Id& img = F.target.comp.at({F.morphism_map.at(pair.first), F.morphism_map.at(pair.second)});
        if (img != F.morphism_map.at(gf))
            rep.add("comp", "functor breaks composition at (" + pair.first + "," + pair.second + ")");
    }
    return rep;
}

FinCategory opposite_category(const FinCategory& c) {
    FinCategory op;
    op.name = c.name;
    op.objects = c.objects;
    op.morphisms = c.morphisms;
    for (auto& m : op.morphisms) std::swap(m.src, m.tgt);
    op.identities = c.identities;
    for (const auto& [key, val] : c.comp) op.comp[{key.second, key.first}] = val;
    return op;
}

MonoidHom compose_homs(const MonoidHom& g, const MonoidHom& f) {
    if (f.target != g.source)
        throw Error("Mismatch", "cannot compose: target of '" + f.source.name + "->" + f.target.name +
                                    "' differs from source of '" + g.source.name + "->" + g.target.name + "'");
    MonoidHom out;
    out.source = f.source;
    out.target = g.target;
    out.map.reserve(f.map.size());
    for (const auto& img : f.map) out.map.push_back(g.apply(img));
    return out;
}

MonoidHom identity_hom(const FinCommMonoid& m) {
    return MonoidHom{m, m, m.elements};
}

ValidationReport validate_hom(const MonoidHom& h) {
    ValidationReport rep;
    if (h.map.size() != h.source.elements.size()) {
        rep.add("MissingEntry", "hom table does not cover '" + h.source.name + "'");
        return rep;
    }
    for (const auto& img : h.map)
        if (!h.target.index_of(img)) {
            rep.add("UnknownElement", "hom maps into undeclared element '" + img + "'");
            return rep;
        }
    if (h.apply(h.source.unit) != h.target.unit)
        rep.add("unit", "hom sends unit to '" + h.apply(h.source.unit) + "'");
    for (const auto& x : h.source.elements)
        for (const auto& y : h.source.elements) {
            const Id& lhs = h.apply(h.source.apply(x, y));
            const Id& rhs = h.target.apply(h.apply(x), h.apply(y));
            if (lhs != rhs)
                rep.add("hom", "map(" + x + "*" + y + ") = " + lhs + " != " + rhs +
                                   " = map(" + x + ")*map(" + y + ")");
        }
    return rep;
}

}  // namespace dct
