#pragma once

#include "dct/gallery.hpp"

namespace dct::testing {

inline FinCommMonoid z_mod(int n, const Id& name) {
    FinCommMonoid m;
    m.name = name;
    for (int i = 0; i < n; ++i) m.elements.push_back(std::to_string(i));
    m.unit = "0";
    m.op.resize(n);
    for (int i = 0; i < n; ++i) {
        m.op[i].resize(n);
        for (int j = 0; j < n; ++j) m.op[i][j] = std::to_string((i + j) % n);
    }
    return m;
}

inline FinCommMonoid trivial_monoid(const Id& name) {
    FinCommMonoid m;
    m.name = name;
    m.elements = {"e"};
    m.unit = "e";
    m.op = {{"e"}};
    return m;
}

// The free category on one arrow arrow: a0 -> a1.
inline FinCategory free_arrow() {
    FinCategory c;
    c.name = "FreeArrow";
    c.objects = {"a0", "a1"};
    c.morphisms = {{"id_a0", "a0", "a0"}, {"id_a1", "a1", "a1"}, {"arrow", "a0", "a1"}};
    c.identities = {{"a0", "id_a0"}, {"a1", "id_a1"}};
    c.comp = {{{"id_a0", "id_a0"}, "id_a0"},
              {{"id_a1", "id_a1"}, "id_a1"},
              {{"arrow", "id_a0"}, "arrow"},
              {{"id_a1", "arrow"}, "arrow"}};
    return c;
}

// The semidirect-z2-z3 decoration with both of its indexings, through the
// same source the gallery ships.
inline Workspace z2_on_z3_workspace() {
    FinCommMonoid z2;
    z2.name = "Z2";
    z2.elements = {"e", "g"};
    z2.unit = "e";
    z2.op = {{"e", "g"}, {"g", "e"}};
    FinCommMonoid z3 = z_mod(3, "Z3");
    MonoidHom negation{z3, z3, {"0", "2", "1"}};
    GalleryResult r = semidirect_example(z2, z3, {{"g", negation}});
    return r.workspace;
}

}  // namespace dct::testing
