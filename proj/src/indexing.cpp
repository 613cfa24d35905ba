#include "dct/indexing.hpp"

#include <algorithm>

namespace dct {

namespace {

struct FiberTable {
    std::map<Id, Pi2Fiber> at;  // object -> fiber
};

FiberTable fibers_of(const DecoratedTwoCat& d) {
    FiberTable t;
    for (const auto& a : d.vertical.objects) t.at.emplace(a, pi2(d.horizontal, a));
    return t;
}

// Source and target objects of a hom assigned to f, by variance.
std::pair<Id, Id> hom_endpoints(const FinMorphism& f, Variance v) {
    if (v == Variance::Covariant) return {f.src, f.tgt};
    return {f.tgt, f.src};
}

}  // namespace

ValidationReport validate_indexing(const Pi2Indexing& phi) {
    ValidationReport rep;
    const FinCategory& bstar = phi.base.vertical;

    FiberTable fibers;
    try {
        fibers = fibers_of(phi.base);
    } catch (const Error& e) {
        rep.add(e.code(), e.what());
        return rep;
    }

    for (const auto& f : bstar.morphisms) {
        auto it = phi.action.find(f.name);
        if (it == phi.action.end()) {
            rep.add("MissingEntry", "indexing '" + phi.name + "' assigns nothing to morphism '" + f.name + "'");
            continue;
        }
        const MonoidHom& h = it->second;
        auto [sobj, tobj] = hom_endpoints(f, phi.variance);
        if (h.source != fibers.at.at(sobj).monoid)
            rep.add("FiberMismatch", "hom of '" + f.name + "' does not start at the fiber of '" + sobj + "'");
        if (h.target != fibers.at.at(tobj).monoid)
            rep.add("FiberMismatch", "hom of '" + f.name + "' does not land in the fiber of '" + tobj + "'");
        ValidationReport hom_rep = validate_hom(h);
        for (const auto& issue : hom_rep.issues)
            rep.add("NotAHom", "hom of '" + f.name + "': " + issue.message);
    }
    for (const auto& [mor, hom] : phi.action)
        if (!bstar.morphism(mor))
            rep.add("UnknownMorphism", "indexing '" + phi.name + "' mentions undeclared morphism '" + mor + "'");
    if (!rep.ok()) return rep;

    for (const auto& [obj, idm] : bstar.identities)
        if (phi.action.at(idm) != identity_hom(fibers.at.at(obj).monoid))
            rep.add("NotFunctorial", "action of identity '" + idm + "' is not the identity hom");

    for (const auto& [pair, gf] : bstar.comp) {
        const MonoidHom& hg = phi.action.at(pair.first);
        const MonoidHom& hf = phi.action.at(pair.second);
        const MonoidHom& hgf = phi.action.at(gf);
        MonoidHom expected = phi.variance == Variance::Covariant ? compose_homs(hg, hf) : compose_homs(hf, hg);
        if (hgf != expected)
            rep.add("NotFunctorial", "action of '" + gf + "' differs from the composite of the actions of '" +
                                         pair.first + "' and '" + pair.second + "'");
    }
    return rep;
}

std::vector<MonoidHom> enumerate_monoid_homs(const FinCommMonoid& source, const FinCommMonoid& target,
                                             std::uint64_t* examined, std::uint64_t cap) {
    std::vector<MonoidHom> out;
    const std::size_t n = source.elements.size();
    const std::size_t unit_pos = *source.index_of(source.unit);

    std::vector<Id> image(n);
    std::uint64_t local = 0;
    std::uint64_t* counter = examined ? examined : &local;

    // Depth-first assignment of images in source element order; the unit's
    // image is forced. Candidates are counted when complete.
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == n) {
            if (++*counter > cap)
                throw Error("SearchBudgetExceeded",
                            "more than " + std::to_string(cap) + " candidate homs examined");
            MonoidHom h{source, target, image};
            if (validate_hom(h).ok()) out.push_back(std::move(h));
            return;
        }
        if (pos == unit_pos) {
            image[pos] = target.unit;
            self(self, pos + 1);
            return;
        }
        for (const auto& t : target.elements) {
            image[pos] = t;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

const MonoidHom& action_of(const Pi2Indexing& phi, const Id& f) {
    if (!phi.base.vertical.morphism(f))
        throw Error("UnknownMorphism", "'" + f + "' is not a morphism of '" + phi.base.vertical.name + "'");
    return phi.action.at(f);
}

std::vector<Pi2Indexing> enumerate_indexings(const DecoratedTwoCat& d, Variance variance, std::uint64_t cap) {
    const FinCategory& bstar = d.vertical;
    FiberTable fibers = fibers_of(d);

    // Non-identity morphisms in sorted identifier order; identities are
    // forced to identity homs up front.
    std::vector<const FinMorphism*> free_mors;
    for (const auto& m : bstar.morphisms)
        if (!bstar.is_identity(m.name)) free_mors.push_back(&m);
    std::sort(free_mors.begin(), free_mors.end(),
              [](const FinMorphism* a, const FinMorphism* b) { return a->name < b->name; });

    std::map<Id, std::vector<MonoidHom>> candidates;
    std::uint64_t examined = 0;
    for (const FinMorphism* m : free_mors) {
        auto [sobj, tobj] = hom_endpoints(*m, variance);
        candidates[m->name] =
            enumerate_monoid_homs(fibers.at.at(sobj).monoid, fibers.at.at(tobj).monoid, &examined, cap);
    }

    std::map<Id, MonoidHom> assignment;
    for (const auto& [obj, idm] : bstar.identities) assignment.emplace(idm, identity_hom(fibers.at.at(obj).monoid));

    // A recorded composition (g,f)->gf is checkable once all of g, f, gf
    // are assigned; prune as soon as one fails.
    auto consistent_so_far = [&]() {
        for (const auto& [pair, gf] : bstar.comp) {
            auto ig = assignment.find(pair.first);
            auto jf = assignment.find(pair.second);
            auto kgf = assignment.find(gf);
            if (ig == assignment.end() || jf == assignment.end() || kgf == assignment.end()) continue;
            MonoidHom expected = variance == Variance::Covariant ? compose_homs(ig->second, jf->second)
                                                                 : compose_homs(jf->second, ig->second);
            if (kgf->second != expected) return false;
        }
        return true;
    };

    std::vector<Pi2Indexing> out;
    auto rec = [&](auto&& self, std::size_t pos) -> void {
        if (pos == free_mors.size()) {
            Pi2Indexing phi;
            phi.name = "phi" + std::to_string(out.size());
            phi.base = d;
            phi.variance = variance;
            phi.action = assignment;
            out.push_back(std::move(phi));
            return;
        }
        const Id& mor = free_mors[pos]->name;
        for (const MonoidHom& h : candidates[mor]) {
            assignment.emplace(mor, h);
            if (consistent_so_far()) self(self, pos + 1);
            assignment.erase(mor);
        }
    };
    rec(rec, 0);
    return out;
}

}  // namespace dct
