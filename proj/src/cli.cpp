#include "dct/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dct/filtration.hpp"
#include "dct/freegg.hpp"
#include "dct/gallery.hpp"
#include "dct/grothendieck.hpp"
#include "dct/model_json.hpp"

namespace dct {

namespace {

using nlohmann::ordered_json;

struct IoError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError{"cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError{"cannot write '" + path + "'"};
    out << content;
    if (!out) throw IoError{"cannot write '" + path + "'"};
}

DoubleCatModel load_model(const std::string& path) {
    ordered_json j;
    try {
        j = ordered_json::parse(read_file(path));
    } catch (const ordered_json::exception& e) {
        throw IoError{std::string("'") + path + "' is not valid JSON: " + e.what()};
    }
    try {
        return model_from_json(j);
    } catch (const Error& e) {
        throw IoError{std::string("'") + path + "': " + e.what()};
    }
}

ordered_json issues_json(const ValidationReport& rep) {
    ordered_json arr = ordered_json::array();
    for (const auto& i : rep.issues) arr.push_back({{"code", i.code}, {"message", i.message}});
    return arr;
}

ordered_json hom_json(const MonoidHom& h) {
    ordered_json t = ordered_json::object();
    for (std::size_t i = 0; i < h.source.elements.size(); ++i) t[h.source.elements[i]] = h.map[i];
    return t;
}

std::uint64_t default_cap() {
    if (const char* env = std::getenv("DCT_SEARCH_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultSearchCap;
}

std::vector<std::string> split_atoms(const std::string& word) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : word) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int cmd_validate(const std::string& file, bool json, std::ostream& out) {
    Workspace w = parse_spec(read_file(file));
    ValidationReport rep;
    for (const auto& [name, m] : w.monoids) rep.merge(validate_monoid(m));
    for (const auto& [name, c] : w.categories) rep.merge(validate_category(c));
    for (const auto& [name, b] : w.twocats) rep.merge(validate_two_category(b));
    for (const auto& [name, refs] : w.decorations) rep.merge(validate_decoration(w.decorated(name)));
    for (const auto& [name, decl] : w.indexings) rep.merge(validate_indexing(w.indexing(name)));

    if (json) {
        ordered_json j;
        j["file"] = file;
        j["ok"] = rep.ok();
        j["issues"] = issues_json(rep);
        out << j.dump(2) << "\n";
    } else if (rep.ok()) {
        out << "ok: " << w.monoids.size() << " monoid(s), " << w.categories.size() << " category(ies), "
            << w.twocats.size() << " twocat(s), " << w.decorations.size() << " decoration(s), "
            << w.indexings.size() << " indexing(s)\n";
    } else {
        out << rep.to_string();
    }
    return rep.ok() ? 0 : 1;
}

int cmd_pi2(const std::string& file, const std::string& twocat, const std::string& object, bool json,
            std::ostream& out) {
    Workspace w = parse_spec(read_file(file));
    auto it = w.twocats.find(twocat);
    if (!w.twocats.count(twocat)) throw Error("UnresolvedReference", "no twocat named '" + twocat + "'");
    Pi2Fiber fiber = pi2(it->second, object);
    if (json) {
        ordered_json j;
        j["object"] = fiber.object;
        j["monoid"] = {{"name", fiber.monoid.name},
                       {"elements", fiber.monoid.elements},
                       {"unit", fiber.monoid.unit},
                       {"op", fiber.monoid.op}};
        out << j.dump(2) << "\n";
    } else {
        out << fiber.monoid.name << ": " << fiber.monoid.elements.size() << " element(s), unit " << fiber.monoid.unit
            << "\n";
        for (std::size_t i = 0; i < fiber.monoid.elements.size(); ++i)
            for (std::size_t j = 0; j < fiber.monoid.elements.size(); ++j)
                out << "  (" << fiber.monoid.elements[i] << "," << fiber.monoid.elements[j] << ") -> "
                    << fiber.monoid.op[i][j] << "\n";
    }
    return 0;
}

int cmd_indexings(const std::string& file, const std::string& decorated, const std::string& variance,
                  std::uint64_t cap, bool json, std::ostream& out) {
    Workspace w = parse_spec(read_file(file));
    Variance v = variance == "op" ? Variance::Contravariant : Variance::Covariant;
    std::vector<Pi2Indexing> found = enumerate_indexings(w.decorated(decorated), v, cap);
    if (json) {
        ordered_json j;
        j["decorated"] = decorated;
        j["variance"] = to_string(v);
        j["count"] = found.size();
        ordered_json arr = ordered_json::array();
        for (const auto& phi : found) {
            ordered_json a = ordered_json::object();
            for (const auto& [mor, hom] : phi.action) a[mor] = hom_json(hom);
            arr.push_back({{"name", phi.name}, {"action", a}});
        }
        j["indexings"] = arr;
        out << j.dump(2) << "\n";
    } else {
        out << found.size() << " " << to_string(v) << " indexing(s) on " << decorated << "\n";
        for (const auto& phi : found) {
            out << "  " << phi.name << ":";
            for (const auto& [mor, hom] : phi.action) {
                if (phi.base.vertical.is_identity(mor)) continue;
                out << " " << mor << "->{";
                for (std::size_t i = 0; i < hom.source.elements.size(); ++i)
                    out << (i ? "," : "") << hom.source.elements[i] << ":" << hom.map[i];
                out << "}";
            }
            out << "\n";
        }
    }
    return 0;
}

int cmd_build(const std::string& file, const std::string& decorated, const std::string& indexing,
              const std::string& out_path, bool json, std::ostream& out) {
    Workspace w = parse_spec(read_file(file));
    if (!w.decorations.count(decorated)) throw Error("UnresolvedReference", "no decorated named '" + decorated + "'");
    Pi2Indexing phi = w.indexing(indexing);
    if (w.indexings.at(indexing).decorated != decorated)
        throw Error("UnresolvedReference", "indexing '" + indexing + "' is not declared on '" + decorated + "'");
    ValidationReport rep = validate_indexing(phi);
    if (!rep.ok()) {
        out << rep.to_string();
        return 1;
    }
    CrossedProduct cp(phi);
    ValidationReport ax = check_double_axioms(cp.model());
    write_file(out_path, model_to_json(cp.model()).dump(2) + "\n");
    if (json) {
        ordered_json j;
        j["squares"] = cp.model().squares.size();
        j["axioms_ok"] = ax.ok();
        j["out"] = out_path;
        out << j.dump(2) << "\n";
    } else {
        out << "built " << cp.model().squares.size() << " squares; axioms " << (ax.ok() ? "ok" : "VIOLATED")
            << "; wrote " << out_path << "\n";
    }
    return ax.ok() ? 0 : 1;
}

int cmd_axioms(const std::string& file, bool json, std::ostream& out) {
    DoubleCatModel m = load_model(file);
    ValidationReport rep = check_double_axioms(m);
    if (json) {
        ordered_json j;
        j["ok"] = rep.ok();
        j["issues"] = issues_json(rep);
        out << j.dump(2) << "\n";
    } else {
        out << (rep.ok() ? "empty report: all double-category laws hold\n" : rep.to_string());
    }
    return rep.ok() ? 0 : 1;
}

int cmd_length(const std::string& file, const std::string& report_path, bool json, std::ostream& out) {
    DoubleCatModel m = load_model(file);
    MarkingReport rep = vertical_filtration(m);
    if (!rep.globularly_generated) {
        MarkingReport inner = vertical_filtration(globularly_generated_piece(m));
        inner.globularly_generated = false;
        rep = inner;
    }
    if (!report_path.empty()) write_file(report_path, report_to_json(rep).dump(2) + "\n");
    if (json) {
        out << report_to_json(rep).dump(2) << "\n";
    } else {
        out << "length " << rep.length << (rep.globularly_generated ? "" : " (of the globularly generated piece)")
            << "\n";
        for (const auto& [sq, twice] : rep.marking2x)
            out << "  " << sq << ": " << MarkingReport::render_marking(twice) << "\n";
    }
    return 0;
}

int cmd_minfact(const std::string& file, const std::string& decorated, const std::string& word, std::size_t budget,
                bool json, std::ostream& out) {
    Workspace w = parse_spec(read_file(file));
    DecoratedTwoCat d = w.decorated(decorated);
    FreeWord fw = make_word(d, split_atoms(word));
    std::size_t min = min_factorization_length(d, fw, budget);
    if (json) {
        ordered_json j;
        j["word"] = word;
        j["budget"] = budget;
        j["min"] = min;
        out << j.dump(2) << "\n";
    } else {
        out << "minimal factorization length: " << min << " (budget " << budget << ")\n";
    }
    return 0;
}

int cmd_example(const std::string& name, const std::string& out_path, bool json, std::ostream& out) {
    GalleryResult r = run_example(name);
    if (!out_path.empty() && !r.models.empty())
        write_file(out_path, model_to_json(r.models.front().second).dump(2) + "\n");
    if (json) {
        out << r.to_json().dump(2) << "\n";
    } else {
        out << r.to_text();
    }
    return r.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finite decorated 2-categories, indexings, and crossed-product double categories"};
    app.require_subcommand(1);
    bool json = false;

    std::string file, twocat, object, decorated, indexing, out_path, report_path, word, variance, format;
    std::uint64_t cap = default_cap();
    std::size_t budget = 6;
    std::string example_name;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "parse a file and check every declared law");
    validate->add_option("file", file, "input .dct file")->required();
    add_format(validate);

    CLI::App* pi2cmd = app.add_subcommand("pi2", "fiber monoid of a 2-category at an object");
    pi2cmd->add_option("file", file)->required();
    pi2cmd->add_option("--twocat", twocat, "2-category name")->required();
    pi2cmd->add_option("--object", object, "0-cell")->required();
    add_format(pi2cmd);

    CLI::App* idx = app.add_subcommand("indexings", "enumerate indexings of a decorated 2-category");
    idx->add_option("file", file)->required();
    idx->add_option("--decorated", decorated)->required();
    idx->add_option("--variance", variance, "co (default) or op")->check(CLI::IsMember({"co", "op"}));
    idx->add_option("--cap", cap, "search budget for candidate homs");
    add_format(idx);

    CLI::App* build = app.add_subcommand("build", "build a crossed product and write its model JSON");
    build->add_option("file", file)->required();
    build->add_option("--decorated", decorated)->required();
    build->add_option("--indexing", indexing)->required();
    build->add_option("--out", out_path)->required();
    add_format(build);

    CLI::App* axioms = app.add_subcommand("axioms", "check the double-category laws of a model JSON");
    axioms->add_option("file", file)->required();
    add_format(axioms);

    CLI::App* lencmd = app.add_subcommand("length", "vertical filtration and length of a model JSON");
    lencmd->add_option("file", file)->required();
    lencmd->add_option("--report", report_path, "write the marking report JSON here");
    add_format(lencmd);

    CLI::App* minfact = app.add_subcommand("minfact", "minimal factorization length of a free vertical word");
    minfact->add_option("file", file)->required();
    minfact->add_option("--decorated", decorated)->required();
    minfact->add_option("--word", word, "comma-separated atoms; U_<morphism> is a unit atom")->required();
    minfact->add_option("--budget", budget, "maximal word length searched")->required();
    add_format(minfact);

    CLI::App* example = app.add_subcommand("example", "run a gallery instance end to end");
    example->add_option("name", example_name, "semidirect-z2-z3 | no-indexing | trivial-pi2 | free-length4")
        ->required();
    example->add_option("--out", out_path, "write the first built model JSON here");
    add_format(example);

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 expects reversed args
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    json = format == "json";
    try {
        if (validate->parsed()) return cmd_validate(file, json, out);
        if (pi2cmd->parsed()) return cmd_pi2(file, twocat, object, json, out);
        if (idx->parsed()) return cmd_indexings(file, decorated, variance, cap, json, out);
        if (build->parsed()) return cmd_build(file, decorated, indexing, out_path, json, out);
        if (axioms->parsed()) return cmd_axioms(file, json, out);
        if (lencmd->parsed()) return cmd_length(file, report_path, json, out);
        if (minfact->parsed()) return cmd_minfact(file, decorated, word, budget, json, out);
        if (example->parsed()) return cmd_example(example_name, out_path, json, out);
    } catch (const IoError& e) {
        err << "io error: " << e.message << "\n";
        return 3;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace dct
