#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "tilespace/collaring.hpp"
#include "tilespace/complex.hpp"
#include "tilespace/dataset.hpp"
#include "tilespace/enumeration.hpp"
#include "tilespace/error.hpp"
#include "tilespace/forcing.hpp"
#include "tilespace/hull.hpp"
#include "tilespace/invlimit.hpp"
#include "tilespace/placement.hpp"
#include "tilespace/report.hpp"
#include "tilespace/symbolic1d.hpp"

using namespace tilespace;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunConfig {
    std::string dataset;
    std::string format = "text";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    bool verbose = false;
};

struct Output {
    std::string text;
    bool ok = true;
};

PentagonDataset dataset_for(const RunConfig& cfg) {
    if (!cfg.dataset.empty())
        return load_dataset(std::filesystem::path(cfg.dataset));
    if (const char* env = std::getenv("TILESPACE_DATASET"); env && *env)
        return load_dataset(std::filesystem::path(env));
    return load_dataset();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string check_lines(const std::vector<CheckResult>& checks) {
    std::ostringstream os;
    for (const auto& c : checks)
        os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " (" << c.provenance << "): " << c.detail << "\n";
    return os.str();
}

Output run_validate(const RunConfig& cfg) {
    PentagonDataset d = dataset_for(cfg);
    ValidationReport r = validate_dataset(d);

    auto layouts = matching_layouts(d);
    r.checks.push_back({"slot layout", "edge readings reproduce the edge table", layouts.size() == 1,
                        std::to_string(layouts.size()) + " matching layout(s)"});
    if (r.passed()) {
        try {
            Placement p = derive_placement(d);
            bool consistent = true;
            std::string first;
            for (const auto& rule : d.rules) {
                PatchReport pr = patch_consistency(d, rule, p.rule(rule.parent));
                if (!pr.passed && consistent) {
                    consistent = false;
                    first = "rule " + std::to_string(rule.parent) + ": " + pr.problems.front();
                }
            }
            r.checks.push_back({"placement", "children fit the patch", p.ambiguities.empty(),
                                p.ambiguities.empty() ? "unique for all rules" : p.ambiguities.front()});
            r.checks.push_back({"patch consistency", "substituted patches agree with the tables", consistent,
                                consistent ? "all rules" : first});
        } catch (const DerivationError& e) {
            r.checks.push_back({"placement", "children fit the patch", false, e.what()});
        }
    }

    Output o{.ok = r.passed()};
    if (cfg.format == "json") {
        o.text = dump(to_json(r));
    } else {
        o.text = "tiles " + std::to_string(r.tile_count) + ", edges " + std::to_string(r.edge_count) + ", vertices " +
                 std::to_string(r.vertex_count) + ", rules " + std::to_string(r.rule_count) + "\n" +
                 check_lines(r.checks) + (r.passed() ? "valid\n" : "invalid\n");
    }
    return o;
}

Output run_enumerate(const RunConfig& cfg) {
    PentagonDataset d = dataset_for(cfg);
    EnumerationResult r = enumerate_and_match(d);
    TileDiff diff = compare_tiles(r.tiles, d.tiles);
    const bool exact = diff.missing.empty() && diff.extra.empty();
    Output o{.ok = exact};
    if (cfg.format == "json") {
        Json j = to_json(r);
        j["match"] = exact ? "exact" : "differs";
        j["missing"] = Json::array();
        for (const auto& t : diff.missing)
            j["missing"].push_back(to_string(t));
        j["extra"] = Json::array();
        for (const auto& t : diff.extra)
            j["extra"].push_back(to_string(t));
        o.text = dump(j);
        return o;
    }
    std::ostringstream os;
    os << "pattern (2): " << r.pattern_two.size() << " candidates\n";
    os << "pattern (1): 1 tile " << to_string(r.pattern_one) << "\n";
    os << "derived " << r.tiles.size() << " tiles, match: ";
    if (exact) {
        os << "exact\n";
    } else {
        os << "differs (" << diff.missing.size() << " missing, " << diff.extra.size() << " extra)\n";
        for (const auto& t : diff.missing)
            os << "  missing " << to_string(t) << "\n";
        for (const auto& t : diff.extra)
            os << "  extra   " << to_string(t) << "\n";
    }
    o.text = os.str();
    return o;
}

Output run_incidence(const RunConfig& cfg) {
    PentagonDataset d = dataset_for(cfg);
    IncidenceStats s = incidence_stats(d, incidence_table(d));
    Output o;
    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "kind,key,value\n";
        for (auto [k, v] : s.edge_join_histogram)
            os << "edge_join," << k << "," << v << "\n";
        for (auto [k, v] : s.distinct_vertex_histogram)
            os << "distinct_vertices," << k << "," << v << "\n";
        for (const auto& v : s.vertices) {
            os << "vertex_degree," << v.vertex << "," << v.degree << "\n";
            os << "vertex_edges," << v.vertex << "," << v.edges << "\n";
            os << "vertex_distinct_edges," << v.vertex << "," << v.distinct_edges << "\n";
            os << "vertex_tiles," << v.vertex << "," << v.tiles << "\n";
        }
        for (std::size_t i = 0; i < s.edges_starting_with.size(); ++i)
            os << "edges_starting_with," << i << "," << s.edges_starting_with[i] << "\n";
        for (std::size_t i = 0; i < s.sides_starting_with.size(); ++i)
            os << "sides_starting_with," << i << "," << s.sides_starting_with[i] << "\n";
        o.text = os.str();
    } else {
        o.text = dump(to_json(s));
    }
    return o;
}

Output run_forcing(const RunConfig& cfg, bool uncollared, int level) {
    PentagonDataset d = dataset_for(cfg);
    Placement p = derive_placement(d);
    ForcingReport r = uncollared ? verify_uncollared_forcing(d, p) : verify_border_forcing(d, p, level);
    Output o{.ok = r.passed()};
    if (cfg.format == "json") {
        o.text = dump(to_json(r));
        return o;
    }
    std::ostringstream os;
    os << (uncollared ? "uncollared " : "") << "edge-level border forcing at k=" << r.level << ": "
       << (r.passed() ? "PASS" : "FAIL") << " (" << r.singleton_count() << "/" << r.sides.size()
       << " sides singleton)\n";
    auto seq = [](const std::vector<int>& v) {
        std::string s;
        for (int x : v)
            s += (s.empty() ? "" : ",") + std::to_string(x);
        return "[" + s + "]";
    };
    const std::string unit = uncollared ? "class " : "t";
    for (const auto& c : r.counterexamples) {
        os << "  " << unit << c.side.tile << " slot " << c.side.slot << ": ";
        if (c.first_labels.empty())
            os << "no compatible neighbour\n";
        else
            os << "t" << c.first_neighbor.tile << "/" << c.first_neighbor.slot << " gives " << seq(c.first_labels)
               << ", t" << c.second_neighbor.tile << "/" << c.second_neighbor.slot << " gives "
               << seq(c.second_labels) << "\n";
        if (!cfg.verbose) {
            if (r.counterexamples.size() > 1)
                os << "  ... " << r.counterexamples.size() - 1 << " more (use --verbose)\n";
            break;
        }
    }
    o.text = os.str();
    return o;
}

Output run_complex(const RunConfig& cfg, const std::string& format, bool faces) {
    PentagonDataset d = dataset_for(cfg);
    CWComplex c = build_complex(d);
    if (format == "dot")
        return {export_dot(c, {.faces = faces}), true};
    Placement p = derive_placement(d);
    return {dump(complex_json(c, chain_maps(d, p, c))), true};
}

std::string degree_lines(const HullReport& r, const std::string& space) {
    std::ostringstream os;
    for (const auto& dr : r.degrees) {
        os << "H^" << dr.degree << "(" << space << ") = " << to_string(dr.complex_group) << "\n";
        os << "  induced map on the free part:\n" << to_string(dr.induced.free_part);
        os << "  limit: rational dimension " << dr.limit.rational_dim << ", free part "
           << dr.limit.description << ", torsion " << to_string(dr.limit.torsion_limit)
           << ", ranks stabilize after " << dr.limit.stabilization_index << " step(s)\n";
    }
    return os.str();
}

Output run_cohomology(const RunConfig& cfg, bool json) {
    PentagonDataset d = dataset_for(cfg);
    HullReport r = hull_cohomology(d);
    Output o{.ok = r.passed()};
    if (json || cfg.format == "json")
        o.text = dump(to_json(r));
    else
        o.text = "cells " + std::to_string(r.cells[0]) + " / " + std::to_string(r.cells[1]) + " / " +
                 std::to_string(r.cells[2]) + "\n" + degree_lines(r, "Gamma") + check_lines(r.checks);
    return o;
}

Output describe_substitution(const SymbolicSubstitution& s, int kmax, const RunConfig& cfg) {
    auto letters = collared_letters(s);
    CollaredNames names(letters);
    auto k = border_forcing_k(s, kmax);
    int shown = k.value_or(kmax);
    auto images = collared_substitution(s, shown);
    APGraph1D g = ap_graph_1d(s);
    HullReport h = limit_cohomology(g.complex, g.maps);

    Output o{.ok = k.has_value() && h.passed()};
    if (cfg.format == "json") {
        Json j;
        j["primitive"] = is_primitive(s);
        j["collared_letters"] = Json::array();
        for (const auto& x : letters)
            j["collared_letters"].push_back(
                {{"name", names(x)}, {"collar", std::string{'(', x.left, ')', x.core, '(', x.right, ')'}}});
        j["forcing_k"] = k ? Json(*k) : Json(nullptr);
        j["images"] = Json::array();
        for (const auto& img : images)
            j["images"].push_back(format_image(img, names, shown));
        j["ap_complex"] = to_json(h);
        o.text = dump(j);
        return o;
    }
    std::ostringstream os;
    os << "primitive: " << (is_primitive(s) ? "yes" : "no") << "\n";
    os << "collared letters:";
    for (const auto& x : letters)
        os << " " << names(x) << ":=(" << x.left << ")" << x.core << "(" << x.right << ")";
    os << "\n";
    if (k)
        os << "border forcing: k=" << *k << "\n";
    else
        os << "border forcing: not reached for k<=" << kmax << "\n";
    for (const auto& img : images)
        os << format_image(img, names, shown) << "\n";
    os << degree_lines(h, "AP complex") << check_lines(h.checks);
    o.text = os.str();
    return o;
}

Output run_shift(const RunConfig& cfg, std::size_t depth) {
    PentagonDataset d = dataset_for(cfg);
    std::mt19937_64 rng(cfg.seed);
    auto next = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
    Thread t = random_thread(depth, next);

    Json steps = Json::array();
    auto record = [&](const std::string& op, const Thread& x) {
        Json s = to_json(x);
        s["op"] = op;
        s["realized"] = realize(d, x);
        steps.push_back(s);
    };
    record("start", t);
    Thread cur = t;
    while (cur.depth() > 0) {
        cur = shift_right(d, cur);
        record("shift_right", cur);
    }
    while (cur.depth() < depth) {
        auto parents = parents_of(d, cur.base_face);
        auto [parent, position] = parents[static_cast<std::size_t>(next(static_cast<int>(parents.size())))];
        cur = shift_left(d, cur, parent, position);
        record("shift_left", cur);
    }
    Json j = {{"seed", cfg.seed}, {"depth", depth}, {"steps", steps}};
    return {dump(j), true};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Collared-tile combinatorics and tiling-space cohomology for the pentagonal substitution"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    app.add_option("--dataset", cfg.dataset, "Directory with tiles.csv, edges.csv, vertices.csv, rules.csv")
        ->check(CLI::ExistingDirectory);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--out", cfg.out, "Write the report to FILE instead of stdout");
    app.add_flag("-v,--verbose", cfg.verbose, "List every counterexample");

    auto* validate = app.add_subcommand("validate", "Check the tables");
    auto* enumerate = app.add_subcommand("enumerate", "Re-derive the collared tiles and compare");
    auto* incidence = app.add_subcommand("incidence", "Incidence statistics (json or csv)");
    auto* forcing = app.add_subcommand("forcing", "Edge-level border forcing");
    bool uncollared = false;
    int level = 1;
    forcing->add_flag("--uncollared", uncollared, "Forget collars first");
    forcing->add_option("--level", level, "Substitution level")->check(CLI::Range(1, 4));
    auto* complex = app.add_subcommand("complex", "Anderson-Putnam complex and chain maps");
    std::string export_format = "json";
    bool faces = false;
    complex->add_option("--export", export_format)->check(CLI::IsMember({"dot", "json"}));
    complex->add_flag("--faces", faces, "Add face nodes to the DOT graph");
    auto* cohomology = app.add_subcommand("cohomology", "Cohomology of the complex and the hull");
    bool cohomology_json = false;
    cohomology->add_flag("--json", cohomology_json);
    auto* fib = app.add_subcommand("fib", "Fibonacci collaring demo");
    auto* subst1d = app.add_subcommand("subst1d", "Collaring and cohomology of a 1D substitution");
    std::string rules_file;
    int kmax = 6;
    subst1d->add_option("--rules", rules_file, "Lines 'a -> ab'")->required()->check(CLI::ExistingFile);
    subst1d->add_option("--kmax", kmax, "Largest k tried for border forcing")->check(CLI::Range(1, 16));
    auto* shift = app.add_subcommand("shift", "Random thread walked by the shift maps");
    std::size_t depth = 3;
    shift->add_option("--depth", depth)->check(CLI::Range(0, 12));
    shift->add_option("--seed", cfg.seed, "Random seed");
    auto* export_dot_cmd = app.add_subcommand("export-dot", "DOT graph of the complex");
    export_dot_cmd->add_flag("--faces", faces, "Add face nodes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    if (incidence->parsed() && cfg.format == "text")
        cfg.format = "json";

    Output out;
    try {
        if (validate->parsed())
            out = run_validate(cfg);
        else if (enumerate->parsed())
            out = run_enumerate(cfg);
        else if (incidence->parsed())
            out = run_incidence(cfg);
        else if (forcing->parsed())
            out = run_forcing(cfg, uncollared, level);
        else if (complex->parsed())
            out = run_complex(cfg, export_format, faces);
        else if (cohomology->parsed())
            out = run_cohomology(cfg, cohomology_json);
        else if (fib->parsed())
            out = describe_substitution(fibonacci(), 2, cfg);
        else if (subst1d->parsed()) {
            std::ifstream in(rules_file);
            std::stringstream buf;
            buf << in.rdbuf();
            out = describe_substitution(parse_substitution(buf.str(), rules_file), kmax, cfg);
        } else if (shift->parsed())
            out = run_shift(cfg, depth);
        else if (export_dot_cmd->parsed())
            out = run_complex(cfg, "dot", faces);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (cfg.out.empty()) {
        std::cout << out.text;
    } else {
        std::ofstream f(cfg.out);
        if (!(f << out.text)) {
            std::cerr << "error: cannot write " << cfg.out << "\n";
            return 1;
        }
    }
    return out.ok ? 0 : 1;
}
