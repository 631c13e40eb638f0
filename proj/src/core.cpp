#include "tilespace/core.hpp"

#include <algorithm>

namespace tilespace {

std::array<int, 15> CollaredTile::flat() const {
    std::array<int, 15> out{};
    for (std::size_t g = 0; g < 5; ++g)
        for (std::size_t i = 0; i < 3; ++i)
            out[3 * g + i] = exterior[g][i].value();
    return out;
}

std::array<int, 8> CollaredEdge::flat() const {
    std::array<int, 8> out{};
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = side_a[i].value();
        out[4 + i] = side_b[i].value();
    }
    return out;
}

std::array<int, 4> CollaredVertex::flat() const {
    std::array<int, 4> out{};
    for (std::size_t i = 0; i < 4; ++i)
        out[i] = corners[i].value();
    return out;
}

CollaredTile normalize_tile(const Interior& interior, const Exterior& exterior) {
    if (interior[0].absent())
        throw MalformedTile("interior decoration contains 0");
    for (std::size_t i = 1; i < 5; ++i)
        if (interior[i].absent() || interior[i] != interior[i - 1].next())
            throw MalformedTile("interior decoration is not a cyclic run: " + to_string(interior[0]) + ".." +
                                to_string(interior[4]));
    std::size_t p1 = static_cast<std::size_t>(std::find(interior.begin(), interior.end(), Decoration(1)) -
                                              interior.begin());
    CollaredTile t;
    for (std::size_t m = 0; m < 5; ++m)
        t.exterior[m] = exterior[(p1 + m) % 5];
    check_tile_shape(t);
    return t;
}

void check_tile_shape(const CollaredTile& t) {
    for (const auto& g : t.exterior)
        if (g[0].absent() || g[1].absent())
            throw MalformedTile("exterior group " + to_string(g) + " has 0 in a required position");
}

EdgeSide canonicalize_side(EdgeSide side) {
    if (side[2].absent())
        std::swap(side[1], side[2]);
    return side;
}

static void check_side(const EdgeSide& s) {
    if (s[0].absent() || s[3].absent())
        throw MalformedEdge("edge side " + to_string(s) + " has 0 at an endpoint position");
    if (s[1].absent() && s[2].absent())
        throw MalformedEdge("edge side " + to_string(s) + " has no middle decoration");
}

CollaredEdge canonicalize_edge(const EdgeSide& a, const EdgeSide& b) {
    check_side(a);
    check_side(b);
    CollaredEdge x{0, canonicalize_side(a), canonicalize_side(b)};
    CollaredEdge y{0, x.side_b, x.side_a};
    return std::min(x, y);
}

bool is_canonical(const CollaredEdge& e) {
    try {
        return canonicalize_edge(e.side_a, e.side_b) == e;
    } catch (const MalformedEdge&) {
        return false;
    }
}

bool follows_edge_pattern(const CollaredEdge& e) {
    return e.side_b[0].next() == e.side_a[3] && e.side_a[0].next() == e.side_b[3];
}

CollaredVertex canonicalize_vertex(std::span<const Decoration> cycle) {
    std::vector<Decoration> nonzero;
    for (Decoration d : cycle)
        if (!d.absent())
            nonzero.push_back(d);
    if (cycle.size() < 3 || cycle.size() > 4 || nonzero.size() < 3 || cycle.size() - nonzero.size() > 1)
        throw MalformedVertex("a vertex has 3 or 4 nonzero corners");

    std::vector<Decoration> best;
    for (std::size_t r = 0; r < nonzero.size(); ++r) {
        std::vector<Decoration> rot(nonzero.begin() + static_cast<long>(r), nonzero.end());
        rot.insert(rot.end(), nonzero.begin(), nonzero.begin() + static_cast<long>(r));
        if (best.empty() || rot < best)
            best = rot;
    }
    CollaredVertex v;
    if (best.size() == 3)
        v.corners = {best[0], Decoration(), best[1], best[2]};
    else
        v.corners = {best[0], best[1], best[2], best[3]};
    return v;
}

bool is_canonical(const CollaredVertex& v) {
    try {
        return canonicalize_vertex(v.corners) == v;
    } catch (const MalformedVertex&) {
        return false;
    }
}

std::vector<Decoration> cyclic_open_interval(Decoration lo, Decoration hi) {
    std::vector<Decoration> out;
    for (Decoration d = lo.next(); d != hi && d != lo; d = d.next())
        out.push_back(d);
    return out;
}

Interior standard_interior() {
    return {Decoration(1), Decoration(2), Decoration(3), Decoration(4), Decoration(5)};
}

std::string to_string(Decoration d) { return std::to_string(d.value()); }

std::string to_string(const DecorationGroup& g) {
    return to_string(g[0]) + "," + to_string(g[1]) + "," + to_string(g[2]);
}

std::string to_string(const CollaredTile& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < 5; ++i)
        s += (i ? " | " : "") + to_string(t.exterior[i]);
    return s + ")";
}

std::string to_string(const EdgeSide& s) {
    return to_string(s[0]) + "," + to_string(s[1]) + "," + to_string(s[2]) + "," + to_string(s[3]);
}

std::string to_string(const CollaredEdge& e) { return "(" + to_string(e.side_a) + " | " + to_string(e.side_b) + ")"; }

std::string to_string(const CollaredVertex& v) { return "(" + to_string(v.corners) + ")"; }

}  // namespace tilespace
