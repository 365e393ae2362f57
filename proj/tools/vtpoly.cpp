// vtpoly: enumerate vertex-transitive candidate maps over the tetrahedral
// rotation group, verify realizations with exact arithmetic, search integer
// bases, export OFF meshes, and decide geometric isomorphism.
//
// Exit codes: 0 success / affirmative verdict, 1 negative verdict,
// 2 usage or parse error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vtpoly/catalog.hpp"
#include "vtpoly/enumerate.hpp"
#include "vtpoly/geomiso.hpp"
#include "vtpoly/mapfile.hpp"
#include "vtpoly/realize.hpp"

namespace {

using namespace vtpoly;

std::vector<OrbitSymbol> load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::parse_error, path + ": cannot open");
    try {
        return parse_map_text(in);
    } catch (const Error& e) {
        raise(Errc::parse_error, path + ": " + e.what());
    }
}

std::string rotation_string(const std::vector<int>& rotation) {
    std::string out = "(";
    for (std::size_t i = 0; i < rotation.size(); ++i) {
        if (i) out += ",";
        out += tetra().name(rotation[i]);
    }
    return out + ")";
}

std::string symbols_string(const std::vector<OrbitSymbol>& symbols) {
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (i) out += "|";
        out += to_string(symbols[i]);
    }
    return out;
}

int cmd_enumerate(const std::string& group, const std::vector<std::string>& filters,
                  int min_genus, const std::string& out_dir) {
    if (group != "T") {
        std::cerr << "error: unsupported group '" << group
                  << "' (only T is implemented)\n";
        return 2;
    }
    EnumerationFilters f;
    f.min_genus = min_genus;
    for (const auto& name : filters) {
        if (name == "tucker") {
            f.tucker = true;
        } else if (name == "schewe") {
            f.schewe = true;
        } else {
            std::cerr << "error: unknown filter '" << name << "'\n";
            return 2;
        }
    }
    const auto classes = enumerate_candidate_maps(f);
    std::filesystem::create_directories(out_dir);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto& c = classes[i];
        const std::string filename = "class_" + std::to_string(i) + ".map";
        std::ofstream out(std::filesystem::path(out_dir) / filename);
        out << "# genus " << c.summary.genus << "\n"
            << write_map_text(c.representative);
        std::cout << "class=" << i << " genus=" << c.summary.genus
                  << " vertices=" << c.summary.vertex_count
                  << " edges=" << c.summary.edge_count
                  << " faces=" << c.summary.face_count
                  << " degree=" << c.summary.schlafli_vertex_degree
                  << " local_rotation=" << rotation_string(c.local_rotation)
                  << " symbols=" << symbols_string(c.representative)
                  << " file=" << filename << "\n";
    }
    if (!f.tucker && !f.schewe && min_genus == 0) {
        std::multiset<int> genera;
        for (const auto& c : classes) genera.insert(c.summary.genus);
        if (genera != std::multiset<int>{0, 1, 3, 3, 4, 4, 6}) {
            std::cerr << "WARNING: enumeration found " << classes.size()
                      << " classes, which differs from the published "
                         "classification {0,1,3,3,4,4,6}; inspect the output\n";
        }
    }
    return 0;
}

int cmd_verify(const std::string& map_path, const std::string& base_text) {
    const auto map = CandidateMap::build(load_map_file(map_path));
    const Vec3 base = parse_vec3(base_text);
    const auto report = verify_realization(map, base);
    std::cout << "verdict=" << (report.embedded() ? "Embedded" : "Failed") << "\n"
              << "vertices=" << report.summary.vertex_count
              << " edges=" << report.summary.edge_count
              << " faces=" << report.summary.face_count << "\n"
              << "genus=" << report.summary.genus << "\n";
    if (const auto* w = std::get_if<CoincidentVertices>(&report.witness)) {
        std::cout << "witness=CoincidentVertices h1=" << tetra().name(w->h1)
                  << " h2=" << tetra().name(w->h2) << "\n";
    } else if (const auto* w = std::get_if<DegenerateFace>(&report.witness)) {
        std::cout << "witness=DegenerateFace face=" << w->face << "\n";
    } else if (const auto* w = std::get_if<FaceIntersection>(&report.witness)) {
        std::cout << "witness=FaceIntersection face1=" << w->face1
                  << " face2=" << w->face2 << " class=" << to_string(w->found)
                  << "\n";
    }
    return report.embedded() ? 0 : 1;
}

int cmd_search(const std::string& map_path, int bound, int workers) {
    const auto map = CandidateMap::build(load_map_file(map_path));
    const auto hits = search_realizations(map, bound, workers);
    for (const auto& v : hits) std::cout << to_string(v) << "\n";
    return hits.empty() ? 1 : 0;
}

int cmd_export(const std::string& map_path, const std::string& base_text,
               const std::string& format, const std::string& out_path) {
    if (format != "off") {
        std::cerr << "error: unsupported format '" << format << "'\n";
        return 2;
    }
    const auto map = CandidateMap::build(load_map_file(map_path));
    const Vec3 base = parse_vec3(base_text);
    std::string off;
    try {
        off = export_off(map, base);
    } catch (const Error& e) {
        if (e.code() == Errc::not_embedded) {
            std::cerr << "error: " << e.what() << "\n";
            return 1;
        }
        throw;
    }
    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
    }
    out << off;
    return 0;
}

int cmd_isomorphic(const std::string& path1, const std::string& path2) {
    const auto m1 = CandidateMap::build(load_map_file(path1));
    const auto m2 = CandidateMap::build(load_map_file(path2));
    const auto witness = maps_isomorphic(m1, m2);
    if (!witness) {
        std::cout << "none\n";
        return 1;
    }
    std::cout << "witness=" << to_string(*witness) << " det=" << witness->det()
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex-transitive polyhedral maps under tetrahedral rotation"};
    app.require_subcommand(1);

    auto* enumerate = app.add_subcommand("enumerate", "enumerate candidate maps");
    std::string group = "T";
    std::vector<std::string> filters;
    int min_genus = 0;
    std::string out_dir = ".";
    enumerate->add_option("--group", group, "rotation group (T)");
    enumerate->add_option("--filter", filters, "admissibility filter: tucker|schewe");
    enumerate->add_option("--min-genus", min_genus, "drop classes below this genus");
    enumerate->add_option("--out", out_dir, "directory for map files");

    auto* verify = app.add_subcommand("verify", "verify a realization");
    std::string map_path, base_text;
    verify->add_option("map", map_path, "map file")->required();
    verify->add_option("--base", base_text, "base vertex a,b,c (rationals allowed)")
        ->required();

    auto* search = app.add_subcommand("search", "scan integer bases");
    std::string search_map;
    int bound = 0, workers = 1;
    search->add_option("map", search_map, "map file")->required();
    search->add_option("--bound", bound, "max |coordinate|")->required();
    search->add_option("--workers", workers, "worker threads");

    auto* exp = app.add_subcommand("export", "export an embedded realization");
    std::string exp_map, exp_base, exp_format = "off", exp_out;
    exp->add_option("map", exp_map, "map file")->required();
    exp->add_option("--base", exp_base, "base vertex a,b,c")->required();
    exp->add_option("--format", exp_format, "output format (off)");
    exp->add_option("--out", exp_out, "output path")->required();

    auto* iso = app.add_subcommand("isomorphic", "geometric isomorphism witness");
    std::string iso_a, iso_b;
    iso->add_option("map1", iso_a, "first map file")->required();
    iso->add_option("map2", iso_b, "second map file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(group, filters, min_genus, out_dir);
        if (verify->parsed()) return cmd_verify(map_path, base_text);
        if (search->parsed()) {
            if (bound < 1) {
                std::cerr << "error: --bound must be >= 1\n";
                return 2;
            }
            if (workers < 1) {
                std::cerr << "error: --workers must be >= 1\n";
                return 2;
            }
            return cmd_search(search_map, bound, workers);
        }
        if (exp->parsed()) return cmd_export(exp_map, exp_base, exp_format, exp_out);
        if (iso->parsed()) return cmd_isomorphic(iso_a, iso_b);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
