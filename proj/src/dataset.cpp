#include "tilespace/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "tilespace/csv.hpp"
#include "tilespace/embedded_data.hpp"

namespace tilespace {

namespace {

constexpr const char* kTilesHeader = "id, f,g,h, i,j,k, l,m,n, o,p,q, r,s,t";
constexpr const char* kEdgesHeader = "id, a,b,c,d, e,f,g,h";
constexpr const char* kVerticesHeader = "id, a,b,c,d";
constexpr const char* kRulesHeader = "parent, c1,c2,c3,c4,c5,c6";

Decoration decoration_at(const CsvRow& row, std::size_t i, const std::string& source) {
    try {
        return Decoration(row.values[i]);
    } catch (const DecorationError& e) {
        throw ParseError(source, row.line, row.columns[i], e.what());
    }
}

std::string row_prefix(const std::string& source, const CsvRow& row) {
    return source + ":" + std::to_string(row.line) + ": ";
}

std::string id_set(const std::vector<int>& ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i)
        s += (i ? ", " : "") + std::to_string(ids[i]);
    return s + "}";
}

// Orders items by id and insists on exactly 1..expected.
template <class T, class IdOf>
void require_ids(std::vector<T>& items, std::size_t expected, const std::string& what, IdOf id_of) {
    std::sort(items.begin(), items.end(), [&](const T& a, const T& b) { return id_of(a) < id_of(b); });
    std::set<int> present;
    for (const T& x : items)
        present.insert(id_of(x));
    std::vector<int> missing, unexpected;
    for (int i = 1; i <= static_cast<int>(expected); ++i)
        if (!present.count(i))
            missing.push_back(i);
    for (int i : present)
        if (i < 1 || i > static_cast<int>(expected))
            unexpected.push_back(i);
    if (!missing.empty())
        throw DatasetError("missing " + what + " ids: " + id_set(missing));
    if (!unexpected.empty())
        throw DatasetError("unexpected " + what + " ids: " + id_set(unexpected));
}

template <class T, class IdOf>
void reject_duplicates(const std::vector<T>& items, const std::vector<CsvRow>& rows, const std::string& source,
                       IdOf id_of) {
    std::map<int, std::size_t> first_line;
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto [it, fresh] = first_line.emplace(id_of(items[i]), rows[i].line);
        if (!fresh)
            throw DatasetError(row_prefix(source, rows[i]) + "duplicate id " + std::to_string(id_of(items[i])) +
                               " (first on line " + std::to_string(it->second) + ")");
    }
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw DatasetError("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

std::optional<int> PentagonDataset::find_tile(const CollaredTile& t) const {
    for (const auto& x : tiles)
        if (x == t)
            return x.id;
    return std::nullopt;
}

std::optional<int> PentagonDataset::find_edge(const CollaredEdge& e) const {
    for (const auto& x : edges)
        if (x == e)
            return x.id;
    return std::nullopt;
}

std::optional<int> PentagonDataset::find_vertex(const CollaredVertex& v) const {
    for (const auto& x : vertices)
        if (x == v)
            return x.id;
    return std::nullopt;
}

DatasetText embedded_dataset_text() {
    return {std::string(embedded::tiles_csv), std::string(embedded::edges_csv), std::string(embedded::vertices_csv),
            std::string(embedded::rules_csv)};
}

DatasetText read_dataset_dir(const std::filesystem::path& dir) {
    return {read_file(dir / "tiles.csv"), read_file(dir / "edges.csv"), read_file(dir / "vertices.csv"),
            read_file(dir / "rules.csv")};
}

PentagonDataset parse_dataset(const DatasetText& text) {
    PentagonDataset d;

    const std::string tiles_src = "tiles.csv";
    auto tile_rows = parse_int_csv(text.tiles, tiles_src, 16);
    for (const auto& row : tile_rows) {
        CollaredTile t;
        t.id = row.values[0];
        for (std::size_t g = 0; g < 5; ++g)
            for (std::size_t i = 0; i < 3; ++i)
                t.exterior[g][i] = decoration_at(row, 1 + 3 * g + i, tiles_src);
        try {
            check_tile_shape(t);
        } catch (const MalformedTile& e) {
            throw DatasetError(row_prefix(tiles_src, row) + e.what());
        }
        d.tiles.push_back(t);
    }
    reject_duplicates(d.tiles, tile_rows, tiles_src, [](const CollaredTile& t) { return t.id; });
    for (std::size_t i = 0; i < d.tiles.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (d.tiles[i] == d.tiles[j])
                throw DatasetError(row_prefix(tiles_src, tile_rows[i]) + "tile " + std::to_string(d.tiles[i].id) +
                                   " repeats the exterior of tile " + std::to_string(d.tiles[j].id));

    const std::string edges_src = "edges.csv";
    auto edge_rows = parse_int_csv(text.edges, edges_src, 9);
    for (const auto& row : edge_rows) {
        CollaredEdge e;
        e.id = row.values[0];
        for (std::size_t i = 0; i < 4; ++i) {
            e.side_a[i] = decoration_at(row, 1 + i, edges_src);
            e.side_b[i] = decoration_at(row, 5 + i, edges_src);
        }
        CollaredEdge c;
        try {
            c = canonicalize_edge(e.side_a, e.side_b);
        } catch (const MalformedEdge& err) {
            throw DatasetError(row_prefix(edges_src, row) + err.what());
        }
        if (!(c == e))
            throw DatasetError(row_prefix(edges_src, row) + "edge " + std::to_string(e.id) +
                               " is not canonical; canonical form is " + to_string(c));
        d.edges.push_back(e);
    }
    reject_duplicates(d.edges, edge_rows, edges_src, [](const CollaredEdge& e) { return e.id; });

    const std::string vertices_src = "vertices.csv";
    auto vertex_rows = parse_int_csv(text.vertices, vertices_src, 5);
    for (const auto& row : vertex_rows) {
        CollaredVertex v;
        v.id = row.values[0];
        for (std::size_t i = 0; i < 4; ++i)
            v.corners[i] = decoration_at(row, 1 + i, vertices_src);
        CollaredVertex c;
        try {
            c = canonicalize_vertex(v.corners);
        } catch (const MalformedVertex& err) {
            throw DatasetError(row_prefix(vertices_src, row) + err.what());
        }
        if (!(c == v))
            throw DatasetError(row_prefix(vertices_src, row) + "vertex " + std::to_string(v.id) +
                               " is not canonical; canonical form is " + to_string(c));
        d.vertices.push_back(v);
    }
    reject_duplicates(d.vertices, vertex_rows, vertices_src, [](const CollaredVertex& v) { return v.id; });

    const std::string rules_src = "rules.csv";
    auto rule_rows = parse_int_csv(text.rules, rules_src, 7);
    for (const auto& row : rule_rows) {
        SubstitutionRule r;
        r.parent = row.values[0];
        for (std::size_t i = 0; i < kChildCount; ++i) {
            r.children[i] = row.values[1 + i];
            if (r.children[i] < 1 || r.children[i] > kTileCount)
                throw DatasetError(row_prefix(rules_src, row) + "child id " + std::to_string(r.children[i]) +
                                   " out of range 1.." + std::to_string(kTileCount));
        }
        d.rules.push_back(r);
    }
    reject_duplicates(d.rules, rule_rows, rules_src, [](const SubstitutionRule& r) { return r.parent; });

    require_ids(d.tiles, kTileCount, "tile", [](const CollaredTile& t) { return t.id; });
    require_ids(d.edges, kEdgeCount, "edge", [](const CollaredEdge& e) { return e.id; });
    require_ids(d.vertices, kVertexCount, "vertex", [](const CollaredVertex& v) { return v.id; });
    require_ids(d.rules, kTileCount, "rule", [](const SubstitutionRule& r) { return r.parent; });
    return d;
}

PentagonDataset load_dataset(const std::optional<std::filesystem::path>& dir) {
    return parse_dataset(dir ? read_dataset_dir(*dir) : embedded_dataset_text());
}

DatasetText serialize_dataset(const PentagonDataset& d) {
    auto join = [](auto begin, auto end) {
        std::string s;
        for (auto it = begin; it != end; ++it)
            s += (it == begin ? "" : ",") + to_string(*it);
        return s;
    };
    DatasetText out;
    out.tiles = std::string(kTilesHeader) + "\n";
    for (const auto& t : d.tiles) {
        out.tiles += std::to_string(t.id);
        for (const auto& g : t.exterior)
            out.tiles += ", " + join(g.begin(), g.end());
        out.tiles += "\n";
    }
    out.edges = std::string(kEdgesHeader) + "\n";
    for (const auto& e : d.edges)
        out.edges += std::to_string(e.id) + ", " + join(e.side_a.begin(), e.side_a.end()) + ", " +
                     join(e.side_b.begin(), e.side_b.end()) + "\n";
    out.vertices = std::string(kVerticesHeader) + "\n";
    for (const auto& v : d.vertices)
        out.vertices += std::to_string(v.id) + ", " + join(v.corners.begin(), v.corners.end()) + "\n";
    out.rules = std::string(kRulesHeader) + "\n";
    for (const auto& r : d.rules) {
        out.rules += std::to_string(r.parent) + ", ";
        for (std::size_t i = 0; i < kChildCount; ++i)
            out.rules += (i ? "," : "") + std::to_string(r.children[i]);
        out.rules += "\n";
    }
    return out;
}

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name)
            return &c;
    return nullptr;
}

namespace {

template <class T, class IdOf>
CheckResult id_completeness(const std::string& name, const std::vector<T>& items, int expected, IdOf id_of) {
    std::map<int, int> seen;
    for (const T& x : items)
        ++seen[id_of(x)];
    std::vector<int> missing, duplicated, unexpected;
    for (int i = 1; i <= expected; ++i)
        if (!seen.count(i))
            missing.push_back(i);
    for (auto [id, n] : seen) {
        if (n > 1)
            duplicated.push_back(id);
        if (id < 1 || id > expected)
            unexpected.push_back(id);
    }
    CheckResult c{name, "reference table size " + std::to_string(expected), true, ""};
    if (!missing.empty())
        c.detail += "missing " + id_set(missing) + " ";
    if (!duplicated.empty())
        c.detail += "duplicated " + id_set(duplicated) + " ";
    if (!unexpected.empty())
        c.detail += "unexpected " + id_set(unexpected) + " ";
    c.passed = c.detail.empty();
    if (c.passed)
        c.detail = std::to_string(items.size()) + " ids, 1.." + std::to_string(expected);
    return c;
}

}  // namespace

ValidationReport validate_dataset(const PentagonDataset& d) {
    ValidationReport r;
    r.tile_count = d.tiles.size();
    r.edge_count = d.edges.size();
    r.vertex_count = d.vertices.size();
    r.rule_count = d.rules.size();

    r.checks.push_back(id_completeness("tile ids", d.tiles, kTileCount, [](const auto& t) { return t.id; }));
    r.checks.back().provenance = "36 collared tiles";
    r.checks.push_back(id_completeness("edge ids", d.edges, kEdgeCount, [](const auto& e) { return e.id; }));
    r.checks.back().provenance = "45 collared edges";
    r.checks.push_back(id_completeness("vertex ids", d.vertices, kVertexCount, [](const auto& v) { return v.id; }));
    r.checks.back().provenance = "10 collared vertices";
    r.checks.push_back(id_completeness("rule parents", d.rules, kTileCount, [](const auto& x) { return x.parent; }));
    r.checks.back().provenance = "one substitution rule per collared tile";

    {
        CheckResult c{"canonical forms", "edge and vertex symmetries", true, ""};
        std::vector<int> bad_edges, bad_vertices, bad_tiles;
        for (const auto& e : d.edges)
            if (!is_canonical(e) || !follows_edge_pattern(e))
                bad_edges.push_back(e.id);
        for (const auto& v : d.vertices)
            if (!is_canonical(v))
                bad_vertices.push_back(v.id);
        for (const auto& t : d.tiles) {
            try {
                check_tile_shape(t);
            } catch (const MalformedTile&) {
                bad_tiles.push_back(t.id);
            }
        }
        if (!bad_tiles.empty())
            c.detail += "tiles " + id_set(bad_tiles) + " ";
        if (!bad_edges.empty())
            c.detail += "edges " + id_set(bad_edges) + " ";
        if (!bad_vertices.empty())
            c.detail += "vertices " + id_set(bad_vertices) + " ";
        c.passed = c.detail.empty();
        if (c.passed)
            c.detail = "all rows canonical";
        r.checks.push_back(c);
    }

    std::set<int> tile_ids;
    for (const auto& t : d.tiles)
        tile_ids.insert(t.id);
    {
        CheckResult c{"rule closure", "substitution rules list collared tiles only", true, ""};
        std::vector<int> open;
        for (const auto& rule : d.rules)
            for (int child : rule.children)
                if (!tile_ids.count(child)) {
                    open.push_back(rule.parent);
                    break;
                }
        c.passed = open.empty();
        c.detail = c.passed ? "every child is a listed tile" : "rules with unknown children " + id_set(open);
        r.checks.push_back(c);
    }
    {
        CheckResult c{"central child", "every rule lists t22 first", true, ""};
        std::vector<int> off;
        for (const auto& rule : d.rules)
            if (rule.children[0] != kCentralTile)
                off.push_back(rule.parent);
        c.passed = off.empty();
        c.detail = c.passed ? "first child is 22 in all rules" : "rules " + id_set(off) + " do not start with 22";
        r.checks.push_back(c);
    }
    {
        CheckResult c{"child coverage", "every collared tile occurs in some patch", true, ""};
        std::set<int> children;
        for (const auto& rule : d.rules)
            children.insert(rule.children.begin(), rule.children.end());
        std::vector<int> uncovered;
        for (int id : tile_ids)
            if (!children.count(id))
                uncovered.push_back(id);
        c.passed = uncovered.empty();
        c.detail = c.passed ? "all tiles occur as children" : "never a child: " + id_set(uncovered);
        r.checks.push_back(c);
    }
    return r;
}

}  // namespace tilespace
