#include "dct/freegg.hpp"

#include <algorithm>

namespace dct {

namespace {

// Boundary 1-cells of a single layer.
std::pair<Id, Id> layer_boundary(const DecoratedTwoCat& d, const FreeLayer& l) {
    const Fin2Category& b = d.horizontal;
    if (l.kind == FreeLayer::Kind::Globular) {
        const TwoCell* c = b.twocell(l.ref);
        if (!c) throw Error("IllFormedWord", "'" + l.ref + "' is not a 2-cell of '" + b.name + "'");
        return {c->src, c->tgt};
    }
    const FinMorphism* f = d.vertical.morphism(l.ref);
    if (!f) throw Error("IllFormedWord", "'" + l.ref + "' is not a morphism of '" + d.vertical.name + "'");
    return {b.identity1.at(f->src), b.identity1.at(f->tgt)};
}

Id layer_frame(const DecoratedTwoCat& d, const FreeLayer& l) {
    if (l.kind == FreeLayer::Kind::Unit) return l.ref;
    const Id& a = d.horizontal.src0_of2(l.ref);
    return d.vertical.identities.at(a);
}

void check_well_formed(const DecoratedTwoCat& d, const FreeWord& w) {
    if (w.layers.empty()) throw Error("IllFormedWord", "a word must have at least one layer");
    for (std::size_t i = 0; i + 1 < w.layers.size(); ++i) {
        Id bottom = layer_boundary(d, w.layers[i]).second;
        Id top = layer_boundary(d, w.layers[i + 1]).first;
        if (bottom != top)
            throw Error("IllFormedWord", "layers " + w.layers[i].render() + " and " + w.layers[i + 1].render() +
                                             " are not vertically composable");
    }
}

// Unit atoms of identity morphisms are identity globular cells.
FreeLayer canonical_layer(const DecoratedTwoCat& d, FreeLayer l) {
    if (l.kind == FreeLayer::Kind::Unit && d.vertical.is_identity(l.ref)) {
        const FinMorphism* f = d.vertical.morphism(l.ref);
        l.kind = FreeLayer::Kind::Globular;
        l.ref = d.horizontal.identity2.at(d.horizontal.identity1.at(f->src));
    }
    return l;
}

}  // namespace

FreeWord make_word(const DecoratedTwoCat& d, const std::vector<std::string>& atoms) {
    FreeWord w;
    for (const auto& a : atoms) {
        FreeLayer l;
        if (a.rfind("U_", 0) == 0 && d.vertical.morphism(a.substr(2))) {
            l.kind = FreeLayer::Kind::Unit;
            l.ref = a.substr(2);
        } else if (d.horizontal.twocell(a)) {
            l.kind = FreeLayer::Kind::Globular;
            l.ref = a;
        } else {
            throw Error("IllFormedWord", "atom '" + a + "' names neither a 2-cell nor a unit U_<morphism>");
        }
        w.layers.push_back(canonical_layer(d, l));
    }
    check_well_formed(d, w);
    return w;
}

std::pair<Id, Id> word_boundary(const DecoratedTwoCat& d, const FreeWord& w) {
    check_well_formed(d, w);
    return {layer_boundary(d, w.layers.front()).first, layer_boundary(d, w.layers.back()).second};
}

Id word_frame(const DecoratedTwoCat& d, const FreeWord& w) {
    check_well_formed(d, w);
    Id frame = layer_frame(d, w.layers.front());
    for (std::size_t i = 1; i < w.layers.size(); ++i)
        frame = d.vertical.comp.at({layer_frame(d, w.layers[i]), frame});
    return frame;
}

FreeWord normalize_word(const DecoratedTwoCat& d, const FreeWord& w) {
    const Fin2Category& b = d.horizontal;
    FreeWord out;
    for (const auto& l : w.layers) out.layers.push_back(canonical_layer(d, l));
    check_well_formed(d, out);

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < out.layers.size(); ++i) {
            FreeLayer& top = out.layers[i];
            FreeLayer& bot = out.layers[i + 1];
            if (top.kind == FreeLayer::Kind::Globular && bot.kind == FreeLayer::Kind::Globular) {
                top.ref = b.vcomp2.at({bot.ref, top.ref});
                out.layers.erase(out.layers.begin() + i + 1);
            } else if (top.kind == FreeLayer::Kind::Unit && bot.kind == FreeLayer::Kind::Unit) {
                top.ref = d.vertical.comp.at({bot.ref, top.ref});
                out.layers.erase(out.layers.begin() + i + 1);
            } else if (top.kind == FreeLayer::Kind::Globular && b.is_identity2(top.ref) &&
                       out.layers.size() > 1) {
                out.layers.erase(out.layers.begin() + i);
            } else if (bot.kind == FreeLayer::Kind::Globular && b.is_identity2(bot.ref) &&
                       out.layers.size() > 1) {
                out.layers.erase(out.layers.begin() + i + 1);
            } else {
                continue;
            }
            changed = true;
            break;
        }
    }
    return out;
}

std::size_t min_factorization_length(const DecoratedTwoCat& d, const FreeWord& w, std::size_t budget) {
    FreeWord target = normalize_word(d, w);
    if (budget < target.layers.size())
        throw Error("BudgetTooSmall", "budget " + std::to_string(budget) + " is below the normal form length " +
                                          std::to_string(target.layers.size()));

    const auto [want_top, want_bottom] = word_boundary(d, target);
    const Id want_frame = word_frame(d, target);

    std::vector<FreeLayer> alphabet;
    for (const auto& c : d.horizontal.twocells) alphabet.push_back({FreeLayer::Kind::Globular, c.name});
    for (const auto& f : d.vertical.morphisms)
        if (!d.vertical.is_identity(f.name)) alphabet.push_back({FreeLayer::Kind::Unit, f.name});

    // Iterative deepening: the first length admitting a congruent word is
    // the minimum.
    FreeWord current;
    for (std::size_t len = 1; len <= budget; ++len) {
        bool found = false;
        auto rec = [&](auto&& self, Id bottom) -> void {
            if (found) return;
            if (current.layers.size() == len) {
                if (bottom == want_bottom && word_frame(d, current) == want_frame &&
                    normalize_word(d, current) == target)
                    found = true;
                return;
            }
            for (const auto& l : alphabet) {
                auto [t, bnew] = layer_boundary(d, l);
                if (current.layers.empty() ? (t != want_top) : (t != bottom)) continue;
                current.layers.push_back(l);
                self(self, bnew);
                current.layers.pop_back();
                if (found) return;
            }
        };
        rec(rec, Id());
        if (found) return len;
    }
    // The normal form itself is always found at its own length.
    return target.layers.size();
}

}  // namespace dct
