#include "tilespace/complex.hpp"

#include <map>
#include <numeric>
#include <set>

#include "tilespace/collaring.hpp"

namespace tilespace {

std::size_t CWComplex::count(int d) const {
    if (d < 0 || d >= static_cast<int>(cells.size()))
        return 0;
    return cells[static_cast<std::size_t>(d)];
}

long CWComplex::euler_characteristic() const {
    long chi = 0;
    for (std::size_t d = 0; d < cells.size(); ++d)
        chi += (d % 2 ? -1 : 1) * static_cast<long>(cells[d]);
    return chi;
}

ChainMaps identity_chain_maps(const CWComplex& c) {
    ChainMaps m;
    for (auto n : c.cells)
        m.maps.push_back(IntegerMatrix::identity(n));
    return m;
}

ChainMaps compose(const ChainMaps& first, const ChainMaps& second) {
    // Rows are sources, so "first then second" multiplies on the right.
    ChainMaps m;
    for (std::size_t d = 0; d < first.maps.size(); ++d)
        m.maps.push_back(first.maps[d] * second.maps[d]);
    return m;
}

std::vector<std::string> boundary_problems(const CWComplex& c) {
    std::vector<std::string> out;
    for (std::size_t d = 1; d < c.boundary.size(); ++d) {
        IntegerMatrix dd = c.boundary[d - 1] * c.boundary[d];
        if (!dd.is_zero())
            out.push_back("boundary_" + std::to_string(d) + " * boundary_" + std::to_string(d + 1) + " != 0");
    }
    return out;
}

std::optional<std::string> commutation_failure(const CWComplex& c, const ChainMaps& m) {
    for (std::size_t d = 1; d <= c.boundary.size(); ++d) {
        const IntegerMatrix& b = c.boundary[d - 1];
        IntegerMatrix lhs = b * m.maps[d].transpose();
        IntegerMatrix rhs = m.maps[d - 1].transpose() * b;
        for (std::size_t j = 0; j < lhs.cols(); ++j)
            for (std::size_t i = 0; i < lhs.rows(); ++i)
                if (lhs(i, j) != rhs(i, j))
                    return "chain map fails to commute with boundary_" + std::to_string(d) + " on " +
                           std::to_string(d) + "-cell " + std::to_string(j + 1);
    }
    return std::nullopt;
}

CWComplex build_complex(const PentagonDataset& d) {
    IncidenceTable inc = incidence_table(d);
    CWComplex c;
    c.cells = {d.vertices.size(), d.edges.size(), d.tiles.size()};
    IntegerMatrix b1(d.vertices.size(), d.edges.size());
    for (const auto& e : d.edges) {
        auto [a, b] = vertices_from_edge(e);
        auto tail = static_cast<std::size_t>(*d.find_vertex(a) - 1);
        auto head = static_cast<std::size_t>(*d.find_vertex(b) - 1);
        c.edge_ends.emplace_back(tail, head);
        if (tail != head) {
            b1(head, static_cast<std::size_t>(e.id - 1)) += 1;
            b1(tail, static_cast<std::size_t>(e.id - 1)) -= 1;
        }
    }
    IntegerMatrix b2(d.edges.size(), d.tiles.size());
    for (const auto& t : d.tiles) {
        const auto& edges = inc.tile_edges[static_cast<std::size_t>(t.id - 1)];
        for (int s = 1; s <= 5; ++s) {
            int eid = edges[static_cast<std::size_t>(s - 1)];
            b2(static_cast<std::size_t>(eid - 1), static_cast<std::size_t>(t.id - 1)) +=
                orientation(read_edge(t, s), d.edge(eid));
        }
        const auto& vs = inc.tile_vertices[static_cast<std::size_t>(t.id - 1)];
        std::set<std::size_t> distinct;
        for (int v : vs)
            distinct.insert(static_cast<std::size_t>(v - 1));
        c.face_vertices.emplace_back(distinct.begin(), distinct.end());
    }
    c.boundary = {b1, b2};
    c.labels.resize(3);
    for (const auto& v : d.vertices)
        c.labels[0].push_back(to_string(v));
    for (const auto& e : d.edges)
        c.labels[1].push_back(to_string(e));
    for (const auto& t : d.tiles)
        c.labels[2].push_back(to_string(t));

    auto problems = boundary_problems(c);
    if (!problems.empty())
        throw DerivationError("orientation convention inconsistent: " + problems.front());
    return c;
}

namespace {

// Fills row `row` of `m` from `values`, or checks it against an earlier reading.
void record_row(IntegerMatrix& m, std::vector<bool>& seen, std::size_t row, const std::vector<Integer>& values,
                const std::string& cell) {
    if (!seen[row]) {
        for (std::size_t j = 0; j < values.size(); ++j)
            m(row, j) = values[j];
        seen[row] = true;
        return;
    }
    for (std::size_t j = 0; j < values.size(); ++j)
        if (m(row, j) != values[j])
            throw DerivationError("image of " + cell + " depends on the tile it is read from");
}

int edge_id_of(const PentagonDataset& d, EdgeSlot s) {
    auto id = d.find_edge(edge_from_slot(d.tile(s.tile), s.slot));
    if (!id)
        throw DerivationError("tile " + std::to_string(s.tile) + " slot " + std::to_string(s.slot) +
                              " reads an unlisted edge");
    return *id;
}

ChainMaps subdivision_maps(const PentagonDataset& d, const Placement& p, const CWComplex& c, int levels) {
    const std::size_t nv = c.count(0), ne = c.count(1), nf = c.count(2);
    IncidenceTable inc = incidence_table(d);

    IntegerMatrix s2(nf, nf);
    for (const auto& t : d.tiles) {
        std::vector<int> layer{t.id};
        for (int l = 0; l < levels; ++l) {
            std::vector<int> next;
            for (int x : layer)
                for (int child : d.rule(x).children)
                    next.push_back(child);
            layer = std::move(next);
        }
        for (int x : layer)
            s2(static_cast<std::size_t>(t.id - 1), static_cast<std::size_t>(x - 1)) += 1;
    }

    IntegerMatrix s1(ne, ne);
    std::vector<bool> seen_edge(ne, false);
    for (const auto& t : d.tiles)
        for (int s = 1; s <= 5; ++s) {
            int eid = inc.tile_edges[static_cast<std::size_t>(t.id - 1)][static_cast<std::size_t>(s - 1)];
            int sign = orientation(read_edge(t, s), d.edge(eid));
            std::vector<Integer> row(ne);
            for (const auto& piece : subdivide_edge(p, {t.id, s}, levels)) {
                int cid = edge_id_of(d, piece);
                row[static_cast<std::size_t>(cid - 1)] +=
                    sign * orientation(read_edge(d.tile(piece.tile), piece.slot), d.edge(cid));
            }
            record_row(s1, seen_edge, static_cast<std::size_t>(eid - 1), row, "edge " + std::to_string(eid));
        }

    IntegerMatrix s0(nv, nv);
    std::vector<bool> seen_vertex(nv, false);
    for (const auto& t : d.tiles)
        for (int label = 1; label <= 5; ++label) {
            int vid = inc.tile_vertices[static_cast<std::size_t>(t.id - 1)][static_cast<std::size_t>(label - 1)];
            ChildSpot spot{t.id, Decoration(label)};
            for (int l = 0; l < levels; ++l)
                spot = corner_child(p.rule(spot.tile), spot.label);
            auto image = d.find_vertex(vertex_at(d.tile(spot.tile), spot.label));
            if (!image)
                throw DerivationError("vertex " + std::to_string(vid) + " maps to an unlisted vertex");
            std::vector<Integer> row(nv);
            row[static_cast<std::size_t>(*image - 1)] = 1;
            record_row(s0, seen_vertex, static_cast<std::size_t>(vid - 1), row, "vertex " + std::to_string(vid));
        }

    for (std::size_t i = 0; i < ne; ++i)
        if (!seen_edge[i])
            throw DerivationError("edge " + std::to_string(i + 1) + " is not on any tile");
    for (std::size_t i = 0; i < nv; ++i)
        if (!seen_vertex[i])
            throw DerivationError("vertex " + std::to_string(i + 1) + " is not on any tile");

    ChainMaps m{{s0, s1, s2}};
    if (auto failure = commutation_failure(c, m))
        throw DerivationError(*failure);
    return m;
}

}  // namespace

ChainMaps chain_maps(const PentagonDataset& d, const Placement& p, const CWComplex& c) {
    return subdivision_maps(d, p, c, 1);
}

ChainMaps chain_maps_power(const PentagonDataset& d, const Placement& p, const CWComplex& c, int levels) {
    return subdivision_maps(d, p, c, levels);
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
    return x;
}

}  // namespace

std::size_t connectivity(const CWComplex& c) {
    const std::size_t n = c.count(0);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    if (!c.boundary.empty()) {
        const IntegerMatrix& b1 = c.boundary[0];
        for (std::size_t e = 0; e < b1.cols(); ++e) {
            std::vector<std::size_t> ends;
            for (std::size_t v = 0; v < b1.rows(); ++v)
                if (b1(v, e) != 0)
                    ends.push_back(v);
            for (std::size_t i = 1; i < ends.size(); ++i)
                parent[find_root(parent, ends[i])] = find_root(parent, ends[0]);
        }
    }
    std::set<std::size_t> roots;
    for (std::size_t v = 0; v < n; ++v)
        roots.insert(find_root(parent, v));
    return roots.size();
}

std::vector<Integer> boundary_multiplicities(const CWComplex& c) {
    std::vector<Integer> out;
    for (const auto& b : c.boundary) {
        Integer m = 0;
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                m = std::max(m, Integer(b(i, j) < 0 ? -b(i, j) : b(i, j)));
        out.push_back(m);
    }
    return out;
}

PerronCertificate perron_certificate(const IntegerMatrix& a) {
    PerronCertificate cert;
    if (!a.square() || a.rows() == 0)
        return cert;
    cert.constant_row_sums = true;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer sum = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j) < 0)
                cert.constant_row_sums = false;
            sum += a(i, j);
        }
        if (i == 0)
            cert.row_sum = sum;
        else if (sum != cert.row_sum)
            cert.constant_row_sums = false;
    }
    IntegerMatrix shifted = a - cert.row_sum * IntegerMatrix::identity(a.rows());
    cert.singular = rank(shifted) < a.rows();
    return cert;
}

std::string export_dot(const CWComplex& c, const DotOptions& options) {
    auto label = [&](std::size_t dim, std::size_t i) -> std::string {
        if (dim < c.labels.size() && i < c.labels[dim].size())
            return "\\n" + c.labels[dim][i];
        return "";
    };
    std::string out = "digraph gamma {\n  node [shape=circle];\n";
    for (std::size_t v = 0; v < c.count(0); ++v)
        out += "  v" + std::to_string(v + 1) + " [label=\"v" + std::to_string(v + 1) + label(0, v) + "\"];\n";

    std::vector<std::pair<std::size_t, std::size_t>> ends = c.edge_ends;
    if (ends.empty() && !c.boundary.empty()) {
        const IntegerMatrix& b1 = c.boundary[0];
        for (std::size_t e = 0; e < b1.cols(); ++e) {
            std::size_t tail = b1.rows(), head = b1.rows();
            for (std::size_t v = 0; v < b1.rows(); ++v) {
                if (b1(v, e) < 0)
                    tail = v;
                if (b1(v, e) > 0)
                    head = v;
            }
            ends.emplace_back(tail, head);
        }
    }
    for (std::size_t e = 0; e < ends.size(); ++e) {
        auto [tail, head] = ends[e];
        if (tail >= c.count(0) || head >= c.count(0))
            continue;
        out += "  v" + std::to_string(tail + 1) + " -> v" + std::to_string(head + 1) + " [label=\"e" +
               std::to_string(e + 1) + "\"];\n";
    }
    if (options.faces) {
        out += "  node [shape=box];\n";
        for (std::size_t f = 0; f < c.count(2); ++f) {
            out += "  t" + std::to_string(f + 1) + " [label=\"t" + std::to_string(f + 1) + "\"];\n";
            if (f < c.face_vertices.size())
                for (std::size_t v : c.face_vertices[f])
                    out += "  t" + std::to_string(f + 1) + " -> v" + std::to_string(v + 1) +
                           " [style=dashed, arrowhead=none];\n";
        }
    }
    return out + "}\n";
}

}  // namespace tilespace
