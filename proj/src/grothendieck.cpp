#include "dct/grothendieck.hpp"

namespace dct {

namespace {

Id pair_name(const Id& frame, const Id& element) { return "(" + frame + "," + element + ")"; }

// Object whose fiber carries the element component of (f, x).
Id element_home(const FinMorphism& f, Variance v) {
    return v == Variance::Covariant ? f.tgt : f.src;
}

}  // namespace

Grothendieck build_grothendieck(const Pi2Indexing& phi) {
    const FinCategory& bstar = phi.base.vertical;
    std::map<Id, Pi2Fiber> fibers;
    for (const auto& a : bstar.objects) fibers.emplace(a, pi2(phi.base.horizontal, a));

    Grothendieck out;
    out.category.name = "int(" + phi.name + ")";
    out.category.objects = bstar.objects;

    for (const auto& f : bstar.morphisms)
        for (const auto& x : fibers.at(element_home(f, phi.variance)).monoid.elements) {
            out.category.morphisms.push_back({pair_name(f.name, x), f.src, f.tgt});
            out.parts[pair_name(f.name, x)] = {f.name, x};
        }
    for (const auto& a : bstar.objects)
        out.category.identities[a] = pair_name(bstar.identities.at(a), fibers.at(a).monoid.unit);

    for (const auto& g : bstar.morphisms)
        for (const auto& f : bstar.morphisms) {
            if (f.tgt != g.src) continue;
            const Id& gf = bstar.comp.at({g.name, f.name});
            const FinCommMonoid& gfib = fibers.at(element_home(g, phi.variance)).monoid;
            const FinCommMonoid& ffib = fibers.at(element_home(f, phi.variance)).monoid;
            for (const auto& x : gfib.elements)
                for (const auto& y : ffib.elements) {
                    Id result;
                    if (phi.variance == Variance::Covariant) {
                        // element of the fiber at tgt(g)
                        result = gfib.apply(x, action_of(phi, g.name).apply(y));
                    } else {
                        // element of the fiber at src(f)
                        result = ffib.apply(action_of(phi, f.name).apply(x), y);
                    }
                    out.category.comp[{pair_name(g.name, x), pair_name(f.name, y)}] = pair_name(gf, result);
                }
        }
    return out;
}

CatFunctor projection(const Grothendieck& g, const Pi2Indexing& phi) {
    CatFunctor P;
    P.source = g.category;
    P.target = phi.base.vertical;
    for (const auto& o : g.category.objects) P.object_map[o] = o;
    for (const auto& [name, fp] : g.parts) P.morphism_map[name] = fp.first;
    return P;
}

CatFunctor unit_section(const Grothendieck& g, const Pi2Indexing& phi) {
    const FinCategory& bstar = phi.base.vertical;
    CatFunctor U;
    U.source = bstar;
    U.target = g.category;
    for (const auto& o : bstar.objects) U.object_map[o] = o;
    for (const auto& f : bstar.morphisms) {
        Id home = phi.variance == Variance::Covariant ? f.tgt : f.src;
        U.morphism_map[f.name] = "(" + f.name + "," + pi2(phi.base.horizontal, home).monoid.unit + ")";
    }
    return U;
}

FinCategory delooping_category(const FinCommMonoid& m, const Id& object) {
    FinCategory c;
    c.name = "Omega(" + m.name + ")";
    c.objects = {object};
    for (const auto& e : m.elements) c.morphisms.push_back({e, object, object});
    c.identities[object] = m.unit;
    for (const auto& x : m.elements)
        for (const auto& y : m.elements) c.comp[{x, y}] = m.apply(x, y);
    return c;
}

CatFunctor fiber_inclusion(const Grothendieck& g, const Pi2Indexing& phi, const Id& object) {
    const FinCategory& bstar = phi.base.vertical;
    if (std::find(bstar.objects.begin(), bstar.objects.end(), object) == bstar.objects.end())
        throw Error("UnknownObject", "'" + object + "' is not an object of '" + bstar.name + "'");
    Pi2Fiber fiber = pi2(phi.base.horizontal, object);

    CatFunctor inc;
    inc.source = delooping_category(fiber.monoid, object);
    inc.target = g.category;
    inc.object_map[object] = object;
    const Id& idm = bstar.identities.at(object);
    for (const auto& x : fiber.monoid.elements) inc.morphism_map[x] = "(" + idm + "," + x + ")";
    return inc;
}

}  // namespace dct
