#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "dct/filtration.hpp"
#include "dct/freegg.hpp"
#include "dct/gallery.hpp"
#include "dct/model_json.hpp"

namespace py = pybind11;
using namespace dct;
using nlohmann::ordered_json;

namespace {

py::object json_to_py(const ordered_json& j) {
    switch (j.type()) {
        case ordered_json::value_t::null: return py::none();
        case ordered_json::value_t::boolean: return py::bool_(j.get<bool>());
        case ordered_json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
        case ordered_json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
        case ordered_json::value_t::number_float: return py::float_(j.get<double>());
        case ordered_json::value_t::string: return py::str(j.get<std::string>());
        case ordered_json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        default: {
            py::dict out;
            for (const auto& [key, val] : j.items()) out[py::str(key)] = json_to_py(val);
            return out;
        }
    }
}

std::vector<std::string> report_lines(const ValidationReport& rep) {
    std::vector<std::string> out;
    for (const auto& i : rep.issues) out.push_back(i.code + ": " + i.message);
    return out;
}

std::vector<std::string> validate_all(const Workspace& w) {
    ValidationReport rep;
    for (const auto& [name, m] : w.monoids) rep.merge(validate_monoid(m));
    for (const auto& [name, c] : w.categories) rep.merge(validate_category(c));
    for (const auto& [name, b] : w.twocats) rep.merge(validate_two_category(b));
    for (const auto& [name, refs] : w.decorations) rep.merge(validate_decoration(w.decorated(name)));
    for (const auto& [name, decl] : w.indexings) rep.merge(validate_indexing(w.indexing(name)));
    return report_lines(rep);
}

Variance parse_variance(const std::string& v) {
    if (v == "co" || v == "covariant") return Variance::Covariant;
    if (v == "op" || v == "contravariant") return Variance::Contravariant;
    throw Error("UnknownVariance", "variance must be 'co' or 'op', not '" + v + "'");
}

template <typename T>
std::vector<Id> map_keys(const T& m) {
    std::vector<Id> out;
    for (const auto& [k, v] : m) out.push_back(k);
    return out;
}

}  // namespace

PYBIND11_MODULE(dctpy, m) {
    m.doc() = "finite decorated 2-categories, fiber-monoid indexings, and crossed-product double categories";

    py::register_exception<Error>(m, "DctError");

    py::class_<Workspace>(m, "Workspace")
        .def_property_readonly("monoids", [](const Workspace& w) { return map_keys(w.monoids); })
        .def_property_readonly("categories", [](const Workspace& w) { return map_keys(w.categories); })
        .def_property_readonly("twocats", [](const Workspace& w) { return map_keys(w.twocats); })
        .def_property_readonly("decorations", [](const Workspace& w) { return map_keys(w.decorations); })
        .def_property_readonly("indexings", [](const Workspace& w) { return map_keys(w.indexings); })
        .def("__eq__", [](const Workspace& a, const Workspace& b) { return a == b; });

    m.def("parse", &parse_spec, py::arg("text"), "Parse specification text into a workspace.");
    m.def("serialize", &serialize, py::arg("workspace"), "Canonical text rendering of a workspace.");
    m.def("validate", &validate_all, py::arg("workspace"),
          "Every violated law across all declarations; empty means valid.");

    m.def(
        "pi2_fiber",
        [](const Workspace& w, const std::string& twocat, const std::string& object) {
            auto it = w.twocats.find(twocat);
            if (it == w.twocats.end()) throw Error("UnresolvedReference", "no twocat named '" + twocat + "'");
            Pi2Fiber fiber = pi2(it->second, object);
            py::dict out;
            out["object"] = fiber.object;
            out["elements"] = fiber.monoid.elements;
            out["unit"] = fiber.monoid.unit;
            out["op"] = fiber.monoid.op;
            return out;
        },
        py::arg("workspace"), py::arg("twocat"), py::arg("object"),
        "The fiber monoid of a 2-category at an object.");

    m.def(
        "count_indexings",
        [](const Workspace& w, const std::string& decorated, const std::string& variance, std::uint64_t cap) {
            return enumerate_indexings(w.decorated(decorated), parse_variance(variance), cap).size();
        },
        py::arg("workspace"), py::arg("decorated"), py::arg("variance") = "co",
        py::arg("cap") = kDefaultSearchCap);

    m.def(
        "enumerate_indexings",
        [](const Workspace& w, const std::string& decorated, const std::string& variance, std::uint64_t cap) {
            py::list out;
            for (const auto& phi : enumerate_indexings(w.decorated(decorated), parse_variance(variance), cap)) {
                py::dict entry;
                entry["name"] = phi.name;
                py::dict action;
                for (const auto& [mor, hom] : phi.action) {
                    py::dict table;
                    for (std::size_t i = 0; i < hom.source.elements.size(); ++i)
                        table[py::str(hom.source.elements[i])] = hom.map[i];
                    action[py::str(mor)] = table;
                }
                entry["action"] = action;
                out.append(entry);
            }
            return out;
        },
        py::arg("workspace"), py::arg("decorated"), py::arg("variance") = "co",
        py::arg("cap") = kDefaultSearchCap, "Action tables of every indexing, in deterministic order.");

    m.def(
        "build_model",
        [](const Workspace& w, const std::string& indexing) {
            ValidationReport rep = validate_indexing(w.indexing(indexing));
            if (!rep.ok()) throw Error("InvalidIndexing", rep.to_string());
            return model_to_json(CrossedProduct(w.indexing(indexing)).model()).dump(2);
        },
        py::arg("workspace"), py::arg("indexing"),
        "Build the crossed product of a declared indexing; returns the model as JSON text.");

    m.def(
        "check_axioms",
        [](const std::string& model_json) {
            return report_lines(check_double_axioms(model_from_json(ordered_json::parse(model_json))));
        },
        py::arg("model_json"), "Violated double-category laws of a model; empty means all hold.");

    m.def(
        "model_length",
        [](const std::string& model_json) { return length(model_from_json(ordered_json::parse(model_json))); },
        py::arg("model_json"));

    m.def(
        "marking_report",
        [](const std::string& model_json) {
            return json_to_py(report_to_json(vertical_filtration(model_from_json(ordered_json::parse(model_json)))));
        },
        py::arg("model_json"), "Vertical filtration markings, witnesses, and length.");

    m.def(
        "min_factorization",
        [](const Workspace& w, const std::string& decorated, const std::vector<std::string>& atoms,
           std::size_t budget) {
            DecoratedTwoCat d = w.decorated(decorated);
            return min_factorization_length(d, make_word(d, atoms), budget);
        },
        py::arg("workspace"), py::arg("decorated"), py::arg("atoms"), py::arg("budget") = 6,
        "Minimal atom count of a free vertical word; U_<morphism> names a unit atom.");

    m.def(
        "run_example", [](const std::string& name) { return json_to_py(run_example(name).to_json()); },
        py::arg("name"), "Run a gallery instance; names: semidirect-z2-z3, no-indexing, trivial-pi2, free-length4.");

    m.def("gallery_names", &gallery_names);
}
