#include "tilespace/enumeration.hpp"

#include <algorithm>
#include <set>

#include "tilespace/csv.hpp"
#include "tilespace/embedded_data.hpp"

namespace tilespace {

std::pair<std::size_t, std::size_t> PatternRow::y5_position() const {
    for (std::size_t g = 0; g < 5; ++g)
        for (std::size_t i = 0; i < 3; ++i)
            if (groups[g][i] == kY5)
                return {g, i};
    throw Error("pattern row " + std::to_string(id) + " has no y5 entry");
}

std::vector<PatternRow> parse_pattern_rows(std::string_view csv) {
    const std::string src = "patternrows.csv";
    std::vector<PatternRow> rows;
    for (const auto& r : parse_int_csv(csv, src, 19)) {
        PatternRow row;
        row.id = r.values[0];
        int y5_count = 0;
        for (std::size_t g = 0; g < 5; ++g)
            for (std::size_t i = 0; i < 3; ++i) {
                int v = r.values[1 + 3 * g + i];
                if (v == kY5)
                    ++y5_count;
                else if (v < 0 || v > 5)
                    throw ParseError(src, r.line, r.columns[1 + 3 * g + i], "decoration out of range");
                row.groups[g][i] = v;
            }
        if (y5_count != 1)
            throw ParseError(src, r.line, 1, "row needs exactly one y5 entry");
        if (r.values[16] < 1 || r.values[16] > 5 || r.values[17] < 1 || r.values[17] > 5)
            throw ParseError(src, r.line, r.columns[16], "y5 bounds must be in 1..5");
        row.lo = Decoration(r.values[16]);
        row.hi = Decoration(r.values[17]);
        row.allow_zero = r.values[18] != 0;
        rows.push_back(row);
    }
    return rows;
}

const std::vector<PatternRow>& embedded_pattern_rows() {
    static const std::vector<PatternRow> rows = parse_pattern_rows(embedded::patternrows_csv);
    return rows;
}

namespace {

int lab(int v) { return Decoration::cyclic(v).value(); }

Interior interior_from(int x) {
    Interior in;
    for (int i = 0; i < 5; ++i)
        in[static_cast<std::size_t>(i)] = Decoration::cyclic(x + i);
    return in;
}

std::size_t index_of_one(const Interior& in) {
    return static_cast<std::size_t>(std::find(in.begin(), in.end(), Decoration(1)) - in.begin());
}

CollaredTile fill(const PatternRow& row, Decoration y5) {
    Exterior ext;
    for (std::size_t g = 0; g < 5; ++g)
        for (std::size_t i = 0; i < 3; ++i)
            ext[g][i] = row.groups[g][i] == kY5 ? y5 : Decoration(row.groups[g][i]);
    return normalize_tile(standard_interior(), ext);
}

}  // namespace

std::vector<PatternRow> pattern_two_rows_from_formula() {
    std::vector<PatternRow> rows;
    for (int x = 1; x <= 5; ++x)
        for (int a = 0; a <= 1; ++a)
            for (int e = 0; e <= 1; ++e) {
                std::array<std::array<int, 3>, 5> raw = {{
                    {lab(x + 3 + a), lab(x + 2 + a), lab(x + 3 + a)},
                    {x, lab(x + 4), 0},
                    {x, lab(x + 4), 0},
                    {lab(x + 1), x, lab(x + 1 + e)},
                    {lab(x + 2 + e), lab(x + 1 + e), kY5},
                }};
                std::size_t p1 = index_of_one(interior_from(x));
                PatternRow row;
                for (std::size_t m = 0; m < 5; ++m)
                    row.groups[m] = raw[(p1 + m) % 5];
                row.lo = Decoration::cyclic(x + 1 + e);
                row.hi = Decoration::cyclic(x + 3 + a);
                rows.push_back(row);
            }
    return rows;
}

CollaredTile pattern_one_tile() {
    std::optional<CollaredTile> tile;
    for (int x = 1; x <= 5; ++x) {
        Exterior ext;
        for (int k = 0; k < 5; ++k)
            ext[static_cast<std::size_t>(k)] = {Decoration::cyclic(x + k + 4), Decoration::cyclic(x + k + 3),
                                                Decoration()};
        CollaredTile t = normalize_tile(interior_from(x), ext);
        if (tile && !(*tile == t))
            throw DerivationError("pattern (1) depends on x");
        tile = t;
    }
    return *tile;
}

std::optional<ForbiddenDecorations> exclusion_reason(const PatternRow& row,
                                                     const std::vector<CollaredVertex>& vertices) {
    if (!row.allow_zero)
        return std::nullopt;
    auto [g, i] = row.y5_position();
    if (i != 2)
        return std::nullopt;
    // With the middle corner gone, the vertex at the far end of slot g is a
    // degree-3 vertex: the tile's own corner and the two neighbours' corners.
    CollaredTile t = fill(row, Decoration());
    // fill() normalizes, which is the identity for stored rows.
    Decoration own = Decoration::cyclic(static_cast<int>(g) + 2);
    std::array<Decoration, 3> cycle = {own, t.exterior[g][1], t.exterior[(g + 1) % 5][0]};
    CollaredVertex v = canonicalize_vertex(cycle);
    if (std::find(vertices.begin(), vertices.end(), v) != vertices.end())
        return std::nullopt;
    ForbiddenDecorations set = {cycle[0].value(), cycle[1].value(), cycle[2].value()};
    std::sort(set.begin(), set.end());
    return set;
}

std::optional<ForbiddenDecorations> exclusion_reason(const PatternRow& row) {
    static const PentagonDataset reference = load_dataset();
    return exclusion_reason(row, reference.vertices);
}

std::vector<Candidate> expand_pattern_row(const PatternRow& row, bool apply_exclusion) {
    std::vector<Candidate> out;
    if (row.allow_zero && !(apply_exclusion && exclusion_reason(row)))
        out.push_back({fill(row, Decoration()), row.id, Decoration()});
    for (Decoration y : cyclic_open_interval(row.lo, row.hi))
        out.push_back({fill(row, y), row.id, y});
    return out;
}

EnumerationMismatch::EnumerationMismatch(TileDiff diff)
    : Error("derived tiles differ from the table: " + std::to_string(diff.missing.size()) + " missing, " +
            std::to_string(diff.extra.size()) + " extra"),
      diff_(std::move(diff)) {}

EnumerationResult enumerate_collared_tiles() {
    EnumerationResult r;
    for (const auto& row : embedded_pattern_rows())
        for (auto& c : expand_pattern_row(row))
            r.pattern_two.push_back(c);
    r.pattern_one = pattern_one_tile();

    std::set<CollaredTile> unique;
    for (const auto& c : r.pattern_two)
        unique.insert(c.tile);
    unique.insert(r.pattern_one);
    r.tiles.assign(unique.begin(), unique.end());
    return r;
}

TileDiff compare_tiles(const std::vector<CollaredTile>& derived, const std::vector<CollaredTile>& listed) {
    std::set<CollaredTile> a(derived.begin(), derived.end());
    std::set<CollaredTile> b(listed.begin(), listed.end());
    TileDiff diff;
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(diff.missing));
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(diff.extra));
    return diff;
}

EnumerationResult enumerate_and_match(const PentagonDataset& d) {
    EnumerationResult r = enumerate_collared_tiles();
    TileDiff diff = compare_tiles(r.tiles, d.tiles);
    if (!diff.empty())
        throw EnumerationMismatch(std::move(diff));
    for (auto& t : r.tiles)
        t.id = *d.find_tile(t);
    for (auto& c : r.pattern_two)
        c.tile.id = *d.find_tile(c.tile);
    r.pattern_one.id = *d.find_tile(r.pattern_one);
    return r;
}

}  // namespace tilespace
