#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tilespace/core.hpp"

namespace tilespace {

inline constexpr int kTileCount = 36;
inline constexpr int kEdgeCount = 45;
inline constexpr int kVertexCount = 10;
inline constexpr int kChildCount = 6;
/** Every rule puts this tile in the middle of the patch. */
inline constexpr int kCentralTile = 22;

/** children[0] is the central child; children[1..5] are peripheral, in cyclic order. */
struct SubstitutionRule {
    int parent = 0;
    std::array<int, kChildCount> children{};

    friend bool operator==(const SubstitutionRule&, const SubstitutionRule&) = default;
};

/**
 * The reference tables. After loading, tiles[i].id == i + 1 and likewise
 * for edges, vertices and rules (indexed by parent).
 */
struct PentagonDataset {
    std::vector<CollaredTile> tiles;
    std::vector<CollaredEdge> edges;
    std::vector<CollaredVertex> vertices;
    std::vector<SubstitutionRule> rules;

    const CollaredTile& tile(int id) const { return tiles.at(static_cast<std::size_t>(id - 1)); }
    const CollaredEdge& edge(int id) const { return edges.at(static_cast<std::size_t>(id - 1)); }
    const CollaredVertex& vertex(int id) const { return vertices.at(static_cast<std::size_t>(id - 1)); }
    const SubstitutionRule& rule(int parent) const { return rules.at(static_cast<std::size_t>(parent - 1)); }

    /** Id of a tile with this exterior, if listed. */
    std::optional<int> find_tile(const CollaredTile& t) const;
    std::optional<int> find_edge(const CollaredEdge& e) const;
    std::optional<int> find_vertex(const CollaredVertex& v) const;
};

/** Raw CSV text of the four tables. */
struct DatasetText {
    std::string tiles;
    std::string edges;
    std::string vertices;
    std::string rules;
};

DatasetText embedded_dataset_text();

/** Reads tiles.csv, edges.csv, vertices.csv and rules.csv from a directory. */
DatasetText read_dataset_dir(const std::filesystem::path& dir);

/**
 * Parses and structurally checks the tables. Throws ParseError on syntax or
 * out-of-range decorations, DatasetError on duplicates, gaps, dangling
 * children, malformed or non-canonical rows.
 */
PentagonDataset parse_dataset(const DatasetText& text);

/** Embedded tables when dir is empty, otherwise the directory's files. */
PentagonDataset load_dataset(const std::optional<std::filesystem::path>& dir = std::nullopt);

DatasetText serialize_dataset(const PentagonDataset& d);

struct CheckResult {
    std::string name;
    std::string provenance;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    std::size_t tile_count = 0;
    std::size_t edge_count = 0;
    std::size_t vertex_count = 0;
    std::size_t rule_count = 0;

    bool passed() const;
    const CheckResult* find(const std::string& name) const;
};

/** Semantic checks; failures are report entries, never exceptions. */
ValidationReport validate_dataset(const PentagonDataset& d);

}  // namespace tilespace
