#include "dct/model_json.hpp"

namespace dct {

using nlohmann::ordered_json;

namespace {

ordered_json triples(const std::map<std::pair<Id, Id>, Id>& table) {
    ordered_json arr = ordered_json::array();
    for (const auto& [key, val] : table) arr.push_back({key.first, key.second, val});
    return arr;
}

std::map<std::pair<Id, Id>, Id> untriples(const ordered_json& arr, const char* what) {
    std::map<std::pair<Id, Id>, Id> out;
    if (!arr.is_array()) throw Error("BadModelFile", std::string(what) + " is not an array");
    for (const auto& t : arr) {
        if (!t.is_array() || t.size() != 3) throw Error("BadModelFile", std::string(what) + " entry is not a triple");
        out[{t[0].get<Id>(), t[1].get<Id>()}] = t[2].get<Id>();
    }
    return out;
}

ordered_json str_map(const std::map<Id, Id>& table) {
    ordered_json obj = ordered_json::object();
    for (const auto& [k, v] : table) obj[k] = v;
    return obj;
}

std::map<Id, Id> unstr_map(const ordered_json& obj, const char* what) {
    std::map<Id, Id> out;
    if (!obj.is_object()) throw Error("BadModelFile", std::string(what) + " is not an object");
    for (const auto& [k, v] : obj.items()) out[k] = v.get<Id>();
    return out;
}

}  // namespace

ordered_json model_to_json(const DoubleCatModel& m) {
    ordered_json j;
    j["format"] = "dct-model";
    j["version"] = 1;

    ordered_json oc;
    oc["name"] = m.object_category.name;
    oc["objects"] = m.object_category.objects;
    ordered_json mors = ordered_json::array();
    for (const auto& mor : m.object_category.morphisms)
        mors.push_back({{"name", mor.name}, {"src", mor.src}, {"tgt", mor.tgt}});
    oc["morphisms"] = mors;
    oc["identities"] = str_map(m.object_category.identities);
    oc["comp"] = triples(m.object_category.comp);
    j["object_category"] = oc;

    j["horizontal_name"] = m.horizontal_name;
    ordered_json cells = ordered_json::array();
    for (const auto& c : m.onecells) cells.push_back({{"name", c.name}, {"src", c.src}, {"tgt", c.tgt}});
    j["onecells"] = cells;
    j["identity1"] = str_map(m.identity1);
    j["comp1"] = triples(m.comp1);

    ordered_json squares = ordered_json::array();
    for (const auto& s : m.squares) {
        ordered_json sq;
        sq["id"] = s.id;
        if (s.sq.kind == Square::Kind::Globular) {
            sq["tag"] = "globular";
            sq["cell"] = s.sq.cell;
        } else {
            sq["tag"] = "framed";
            sq["up"] = s.sq.up;
            sq["frame"] = s.sq.frame;
            sq["down"] = s.sq.down;
        }
        sq["top"] = s.top;
        sq["bottom"] = s.bottom;
        sq["left"] = s.left;
        sq["right"] = s.right;
        squares.push_back(sq);
    }
    j["squares"] = squares;
    j["identity_square"] = str_map(m.identity_square);
    j["vcomp"] = triples(m.vcomp);
    j["hcomp"] = triples(m.hcomp);
    j["unit"] = str_map(m.unit);
    return j;
}

DoubleCatModel model_from_json(const ordered_json& j) {
    if (!j.is_object() || j.value("format", "") != "dct-model")
        throw Error("BadModelFile", "not a dct-model document");
    DoubleCatModel m;
    try {
        const auto& oc = j.at("object_category");
        m.object_category.name = oc.at("name").get<Id>();
        m.object_category.objects = oc.at("objects").get<std::vector<Id>>();
        for (const auto& mor : oc.at("morphisms"))
            m.object_category.morphisms.push_back(
                {mor.at("name").get<Id>(), mor.at("src").get<Id>(), mor.at("tgt").get<Id>()});
        m.object_category.identities = unstr_map(oc.at("identities"), "identities");
        m.object_category.comp = untriples(oc.at("comp"), "comp");

        m.horizontal_name = j.at("horizontal_name").get<Id>();
        for (const auto& c : j.at("onecells"))
            m.onecells.push_back({c.at("name").get<Id>(), c.at("src").get<Id>(), c.at("tgt").get<Id>()});
        m.identity1 = unstr_map(j.at("identity1"), "identity1");
        m.comp1 = untriples(j.at("comp1"), "comp1");

        for (const auto& sq : j.at("squares")) {
            ModelSquare s;
            s.id = sq.at("id").get<Id>();
            if (sq.at("tag") == "globular") {
                s.sq = Square::globular(sq.at("cell").get<Id>());
            } else if (sq.at("tag") == "framed") {
                s.sq = Square::framed(sq.at("up").get<Id>(), sq.at("frame").get<Id>(), sq.at("down").get<Id>());
            } else {
                throw Error("BadModelFile", "square tag must be globular or framed");
            }
            s.top = sq.at("top").get<Id>();
            s.bottom = sq.at("bottom").get<Id>();
            s.left = sq.at("left").get<Id>();
            s.right = sq.at("right").get<Id>();
            m.squares.push_back(std::move(s));
        }
        m.identity_square = unstr_map(j.at("identity_square"), "identity_square");
        m.vcomp = untriples(j.at("vcomp"), "vcomp");
        m.hcomp = untriples(j.at("hcomp"), "hcomp");
        m.unit = unstr_map(j.at("unit"), "unit");
    } catch (const ordered_json::exception& e) {
        throw Error("BadModelFile", e.what());
    }
    return m;
}

}  // namespace dct
