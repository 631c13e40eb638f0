#include "tilespace/collaring.hpp"

#include <algorithm>
#include <set>

namespace tilespace {

namespace {

std::size_t group_of_vertex(Decoration label, const SlotLayout& layout) {
    return static_cast<std::size_t>(Decoration::cyclic(label.value() - layout.label_offset).value() - 1);
}

Decoration label_of_slot_start(int slot) { return Decoration::cyclic(slot); }

EdgeSide rotate_left(const std::array<Decoration, 4>& c) { return {c[1], c[2], c[3], c[0]}; }

}  // namespace

std::array<Decoration, 4> corner_cycle(const CollaredTile& t, Decoration label, const SlotLayout& layout) {
    std::size_t k = group_of_vertex(label, layout);
    const auto& grp = t.exterior[k];
    Decoration after = t.exterior[(k + 1) % 5][0];
    if (layout.mirrored)
        return {label, after, grp[2], grp[1]};
    return {label, grp[1], grp[2], after};
}

CollaredVertex vertex_at(const CollaredTile& t, Decoration label, const SlotLayout& layout) {
    return canonicalize_vertex(corner_cycle(t, label, layout));
}

OrientedEdge read_edge(const CollaredTile& t, int slot, const SlotLayout& layout) {
    if (slot < 1 || slot > 5)
        throw Error("slot out of range: " + std::to_string(slot));
    Decoration p = label_of_slot_start(slot);
    OrientedEdge e;
    e.tail = canonicalize_side(corner_cycle(t, p, layout));
    e.head = canonicalize_side(rotate_left(corner_cycle(t, p.next(), layout)));
    return e;
}

CollaredEdge edge_from_slot(const CollaredTile& t, int slot, const SlotLayout& layout) {
    OrientedEdge r = read_edge(t, slot, layout);
    try {
        return canonicalize_edge(r.tail, r.head);
    } catch (const MalformedEdge& e) {
        throw DerivationError("tile " + std::to_string(t.id) + " slot " + std::to_string(slot) + ": " + e.what());
    }
}

int orientation(const OrientedEdge& reading, const CollaredEdge& canonical) {
    if (reading.tail == canonical.side_a && reading.head == canonical.side_b)
        return 1;
    if (reading.tail == canonical.side_b && reading.head == canonical.side_a)
        return -1;
    throw DerivationError("reading does not match edge " + to_string(canonical));
}

std::pair<CollaredVertex, CollaredVertex> vertices_from_edge(const CollaredEdge& e) {
    // A side lists the corners around its endpoint, so it is a vertex cycle.
    try {
        return {canonicalize_vertex(e.side_a), canonicalize_vertex(e.side_b)};
    } catch (const MalformedVertex& err) {
        throw DerivationError("edge " + to_string(e) + ": " + err.what());
    }
}

std::vector<SlotLayout> matching_layouts(const PentagonDataset& d) {
    std::set<CollaredEdge> table_edges;
    std::set<CollaredVertex> table_vertices;
    for (auto e : d.edges) {
        e.id = 0;
        table_edges.insert(e);
    }
    for (auto v : d.vertices) {
        v.id = 0;
        table_vertices.insert(v);
    }
    std::vector<SlotLayout> out;
    for (int offset = 0; offset < 5; ++offset)
        for (bool mirrored : {false, true}) {
            SlotLayout layout{offset, mirrored};
            std::set<CollaredEdge> edges;
            std::set<CollaredVertex> vertices;
            bool ok = true;
            for (const auto& t : d.tiles)
                for (int s = 1; s <= 5 && ok; ++s) {
                    try {
                        OrientedEdge r = read_edge(t, s, layout);
                        edges.insert(canonicalize_edge(r.tail, r.head));
                        vertices.insert(vertex_at(t, label_of_slot_start(s), layout));
                    } catch (const Error&) {
                        ok = false;
                    }
                }
            if (ok && edges == table_edges && vertices == table_vertices)
                out.push_back(layout);
        }
    return out;
}

IncidenceTable incidence_table(const PentagonDataset& d) {
    IncidenceTable inc;
    inc.edge_to_slots.resize(d.edges.size());
    inc.vertex_to_edges.resize(d.vertices.size());
    inc.vertex_to_tiles.resize(d.vertices.size());
    for (const auto& t : d.tiles) {
        std::array<int, 5> edges{}, vertices{};
        for (int s = 1; s <= 5; ++s) {
            auto eid = d.find_edge(edge_from_slot(t, s));
            auto vid = d.find_vertex(vertex_at(t, label_of_slot_start(s)));
            if (!eid || !vid)
                throw DerivationError("tile " + std::to_string(t.id) + " slot " + std::to_string(s) +
                                      " reads a cell missing from the tables");
            edges[static_cast<std::size_t>(s - 1)] = *eid;
            vertices[static_cast<std::size_t>(s - 1)] = *vid;
            inc.edge_to_slots[static_cast<std::size_t>(*eid - 1)].push_back({t.id, s});
        }
        inc.tile_edges.push_back(edges);
        inc.tile_vertices.push_back(vertices);
        for (int v : std::set<int>(vertices.begin(), vertices.end()))
            inc.vertex_to_tiles[static_cast<std::size_t>(v - 1)].push_back(t.id);
    }
    for (const auto& e : d.edges) {
        auto [a, b] = vertices_from_edge(e);
        for (const auto& v : {a, b}) {
            auto vid = d.find_vertex(v);
            if (!vid)
                throw DerivationError("edge " + std::to_string(e.id) + " has an endpoint missing from the tables");
            inc.vertex_to_edges[static_cast<std::size_t>(*vid - 1)].push_back(e.id);
        }
    }
    return inc;
}

IncidenceStats incidence_stats(const PentagonDataset& d, const IncidenceTable& inc) {
    IncidenceStats st;
    for (const auto& slots : inc.edge_to_slots) {
        ++st.edge_join_histogram[static_cast<int>(slots.size())];
        st.total_slots += static_cast<int>(slots.size());
    }
    for (const auto& vs : inc.tile_vertices)
        ++st.distinct_vertex_histogram[static_cast<int>(std::set<int>(vs.begin(), vs.end()).size())];
    for (const auto& v : d.vertices) {
        const auto& edges = inc.vertex_to_edges[static_cast<std::size_t>(v.id - 1)];
        st.vertices.push_back({v.id, v.degree(), static_cast<int>(edges.size()),
                               static_cast<int>(std::set<int>(edges.begin(), edges.end()).size()),
                               static_cast<int>(inc.vertex_to_tiles[static_cast<std::size_t>(v.id - 1)].size())});
    }
    for (const auto& e : d.edges) {
        ++st.edges_starting_with[static_cast<std::size_t>(e.side_a[0].value() - 1)];
        ++st.sides_starting_with[static_cast<std::size_t>(e.side_a[0].value() - 1)];
        ++st.sides_starting_with[static_cast<std::size_t>(e.side_b[0].value() - 1)];
    }
    return st;
}

std::vector<EdgeSlot> compatible_neighbors(const PentagonDataset& d, EdgeSlot side) {
    OrientedEdge mine = read_edge(d.tile(side.tile), side.slot);
    OrientedEdge wanted{mine.head, mine.tail};
    std::vector<EdgeSlot> out;
    for (const auto& u : d.tiles)
        for (int s = 1; s <= 5; ++s)
            if (read_edge(u, s) == wanted)
                out.push_back({u.id, s});
    return out;
}

}  // namespace tilespace
