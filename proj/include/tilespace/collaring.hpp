#pragma once

#include <array>
#include <compare>
#include <map>
#include <utility>
#include <vector>

#include "tilespace/core.hpp"
#include "tilespace/dataset.hpp"

namespace tilespace {

/** The edge of `tile` from interior vertex `slot` to `slot`+1 (1..5). */
struct EdgeSlot {
    int tile = 0;
    int slot = 0;
    friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};

/**
 * How exterior groups map to corners. Exterior group k (0-based) closes the
 * vertex with interior label k + label_offset + 1; its clockwise corner cycle
 * is (own, g_k, h_k, f_{k+1}), or reversed when mirrored.
 */
struct SlotLayout {
    int label_offset = 1;
    bool mirrored = false;
    friend auto operator<=>(const SlotLayout&, const SlotLayout&) = default;
};

/** The only layout reproducing the edge and vertex tables; see matching_layouts(). */
inline constexpr SlotLayout kFrozenLayout{1, false};

/** Every candidate layout whose derived edges and vertices equal the tables. */
std::vector<SlotLayout> matching_layouts(const PentagonDataset& d);

/** Clockwise corners around the vertex at interior label `label`, starting with the tile's own. */
std::array<Decoration, 4> corner_cycle(const CollaredTile& t, Decoration label,
                                       const SlotLayout& layout = kFrozenLayout);
CollaredVertex vertex_at(const CollaredTile& t, Decoration label, const SlotLayout& layout = kFrozenLayout);

/** An edge as seen from one tile: tail is the side at interior vertex `slot`. */
struct OrientedEdge {
    EdgeSide tail{};
    EdgeSide head{};
    friend bool operator==(const OrientedEdge&, const OrientedEdge&) = default;
};

OrientedEdge read_edge(const CollaredTile& t, int slot, const SlotLayout& layout = kFrozenLayout);
CollaredEdge edge_from_slot(const CollaredTile& t, int slot, const SlotLayout& layout = kFrozenLayout);

/** +1 when the reading runs from the canonical side A to side B. */
int orientation(const OrientedEdge& reading, const CollaredEdge& canonical);

/** Endpoint vertices: the one carrying side A first. */
std::pair<CollaredVertex, CollaredVertex> vertices_from_edge(const CollaredEdge& e);

struct IncidenceTable {
    std::vector<std::vector<EdgeSlot>> edge_to_slots;  // by edge id - 1
    std::vector<std::vector<int>> vertex_to_edges;     // endpoint incidences; a loop counts twice
    std::vector<std::vector<int>> vertex_to_tiles;     // distinct tile ids
    std::vector<std::array<int, 5>> tile_edges;        // edge id per slot
    std::vector<std::array<int, 5>> tile_vertices;     // vertex id per interior label
};

/** Throws DerivationError if a derived edge or vertex is not in the tables. */
IncidenceTable incidence_table(const PentagonDataset& d);

struct VertexIncidence {
    int vertex = 0;
    int degree = 0;
    int edges = 0;           // endpoint incidences
    int distinct_edges = 0;
    int tiles = 0;
};

struct IncidenceStats {
    std::map<int, int> edge_join_histogram;        // tiles-per-edge -> number of edges
    std::map<int, int> distinct_vertex_histogram;  // distinct vertices per tile -> number of tiles
    std::vector<VertexIncidence> vertices;
    std::array<int, 5> edges_starting_with{};      // canonical edges by first decoration
    std::array<int, 5> sides_starting_with{};      // both sides of every edge by first decoration
    int total_slots = 0;
};

IncidenceStats incidence_stats(const PentagonDataset& d, const IncidenceTable& inc);

/** Slots whose reading is this slot's reading with tail and head exchanged. */
std::vector<EdgeSlot> compatible_neighbors(const PentagonDataset& d, EdgeSlot side);

}  // namespace tilespace
