#include "dct/filtration.hpp"

#include <algorithm>
#include <set>

namespace dct {

std::string MarkingReport::render_marking(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice / 2) + "+1/2";
}

namespace {

std::vector<Id> sweep_ids(const DoubleCatModel& m, SweepOrder order) {
    std::vector<Id> ids;
    ids.reserve(m.squares.size());
    for (const auto& s : m.squares) ids.push_back(s.id);
    if (order == SweepOrder::Reverse) std::reverse(ids.begin(), ids.end());
    return ids;
}

// One closure pass: repeatedly add composites of pairs already in the set
// until nothing new appears. `table` is either vcomp or hcomp; for vcomp
// the key is (second, first) and the witness node is (v first second).
void close_under(const std::map<std::pair<Id, Id>, Id>& table, bool vertical, const std::vector<Id>& sweep,
                 std::set<Id>& members, std::map<Id, std::string>& witness, std::map<Id, int>& marking2x,
                 int stage2x) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& a : sweep) {
            if (!members.count(a)) continue;
            for (const auto& b : sweep) {
                if (!members.count(b)) continue;
                auto it = vertical ? table.find({b, a}) : table.find({a, b});
                if (it == table.end()) continue;
                const Id& r = it->second;
                if (members.count(r)) continue;
                members.insert(r);
                marking2x[r] = stage2x;
                witness[r] = vertical ? "(v " + witness.at(a) + " " + witness.at(b) + ")"
                                      : "(h " + witness.at(a) + " " + witness.at(b) + ")";
                changed = true;
            }
        }
    }
}

}  // namespace

MarkingReport vertical_filtration(const DoubleCatModel& m, SweepOrder order) {
    MarkingReport rep;
    std::set<Id> members;
    std::set<Id> units;
    for (const auto& [f, s] : m.unit) units.insert(s);

    for (const auto& s : m.squares) {
        bool globular = s.sq.kind == Square::Kind::Globular;
        if (globular || units.count(s.id)) {
            members.insert(s.id);
            rep.marking2x[s.id] = 0;
            rep.witness[s.id] = globular ? "g:" + s.sq.cell : "u:" + [&] {
                for (const auto& [f, sq] : m.unit)
                    if (sq == s.id) return f;
                return Id();
            }();
        }
    }

    const std::vector<Id> sweep = sweep_ids(m, order);
    int stage = 1;
    for (;;) {
        std::size_t before = members.size();
        close_under(m.vcomp, true, sweep, members, rep.witness, rep.marking2x, 2 * stage);
        std::size_t after_v = members.size();
        close_under(m.hcomp, false, sweep, members, rep.witness, rep.marking2x, 2 * stage + 1);
        if (members.size() == before) break;
        // A horizontal stage that adds nothing on top of a vertical stage
        // that also added nothing means the filtration is stable.
        if (members.size() == after_v && after_v == before) break;
        ++stage;
    }

    rep.globularly_generated = members.size() == m.squares.size();
    int len = 1;
    for (const auto& [sq, twice] : rep.marking2x) len = std::max(len, (twice + 1) / 2);
    rep.length = len;
    return rep;
}

DoubleCatModel globularly_generated_piece(const DoubleCatModel& m) {
    MarkingReport rep = vertical_filtration(m);

    DoubleCatModel g;
    g.object_category = m.object_category;
    g.horizontal_name = m.horizontal_name;
    g.onecells = m.onecells;
    g.identity1 = m.identity1;
    g.comp1 = m.comp1;
    for (const auto& s : m.squares)
        if (rep.marking2x.count(s.id)) g.squares.push_back(s);
    g.identity_square = m.identity_square;
    for (const auto& [pair, r] : m.vcomp)
        if (rep.marking2x.count(pair.first) && rep.marking2x.count(pair.second)) g.vcomp[pair] = r;
    for (const auto& [pair, r] : m.hcomp)
        if (rep.marking2x.count(pair.first) && rep.marking2x.count(pair.second)) g.hcomp[pair] = r;
    g.unit = m.unit;
    return g;
}

int length(const DoubleCatModel& m) {
    MarkingReport rep = vertical_filtration(m);
    if (!rep.globularly_generated) rep = vertical_filtration(globularly_generated_piece(m));
    return rep.length;
}

nlohmann::ordered_json report_to_json(const MarkingReport& r) {
    nlohmann::ordered_json j;
    j["globularly_generated"] = r.globularly_generated;
    j["length"] = r.length;
    nlohmann::ordered_json markings = nlohmann::ordered_json::array();
    for (const auto& [sq, twice] : r.marking2x)
        markings.push_back({{"square", sq}, {"marking", MarkingReport::render_marking(twice)}});
    j["markings"] = markings;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const auto& [sq, w] : r.witness) witnesses.push_back({{"square", sq}, {"expr", w}});
    j["witnesses"] = witnesses;
    return j;
}

}  // namespace dct
