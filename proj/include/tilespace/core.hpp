#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <vector>

#include "tilespace/error.hpp"

namespace tilespace {

/**
 * A vertex decoration: 1..5 cyclically, or 0 for "absent" (the unused
 * middle corner of a degree-3 vertex). Arithmetic on 0 throws.
 */
class Decoration {
public:
    constexpr Decoration() = default;

    constexpr explicit Decoration(int value) : value_(value) {
        if (value < 0 || value > 5)
            throw DecorationError("decoration out of range: " + std::to_string(value));
    }

    /** Reduces any integer to its representative in 1..5. */
    static constexpr Decoration cyclic(int v) { return Decoration(((v - 1) % 5 + 5) % 5 + 1); }

    constexpr int value() const { return value_; }
    constexpr bool absent() const { return value_ == 0; }

    constexpr Decoration shifted(int k) const {
        if (absent())
            throw DecorationError("cyclic arithmetic on the absent decoration");
        return cyclic(value_ + k);
    }
    constexpr Decoration next() const { return shifted(1); }
    constexpr Decoration prev() const { return shifted(-1); }

    friend constexpr auto operator<=>(Decoration, Decoration) = default;

private:
    int value_ = 0;
};

using DecorationGroup = std::array<Decoration, 3>;
using Exterior = std::array<DecorationGroup, 5>;
using Interior = std::array<Decoration, 5>;
/** One side of a collared edge: (i, i', i'', j+1). */
using EdgeSide = std::array<Decoration, 4>;

/**
 * A collared pentagon in normalized form: interior decorations are
 * (1,2,3,4,5) and exterior group k belongs to the edge from interior
 * vertex k to k+1. Identity is the decoration content; id is a label.
 */
struct CollaredTile {
    int id = 0;
    Exterior exterior{};

    std::array<int, 15> flat() const;
    friend bool operator==(const CollaredTile& a, const CollaredTile& b) { return a.exterior == b.exterior; }
    friend auto operator<=>(const CollaredTile& a, const CollaredTile& b) { return a.exterior <=> b.exterior; }
};

struct CollaredEdge {
    int id = 0;
    EdgeSide side_a{};
    EdgeSide side_b{};

    std::array<int, 8> flat() const;
    friend bool operator==(const CollaredEdge& a, const CollaredEdge& b) {
        return a.side_a == b.side_a && a.side_b == b.side_b;
    }
    friend auto operator<=>(const CollaredEdge& a, const CollaredEdge& b) {
        if (auto c = a.side_a <=> b.side_a; c != 0)
            return c;
        return a.side_b <=> b.side_b;
    }
};

/** Clockwise corner decorations around a vertex; a degree-3 vertex has 0 in position 2. */
struct CollaredVertex {
    int id = 0;
    std::array<Decoration, 4> corners{};

    int degree() const { return corners[1].absent() ? 3 : 4; }
    std::array<int, 4> flat() const;
    friend bool operator==(const CollaredVertex& a, const CollaredVertex& b) { return a.corners == b.corners; }
    friend auto operator<=>(const CollaredVertex& a, const CollaredVertex& b) { return a.corners <=> b.corners; }
};

/** Rotates the exterior so that group 1 belongs to the interior vertex decorated 1. */
CollaredTile normalize_tile(const Interior& interior, const Exterior& exterior);

/** Checks the per-entry ranges of a normalized tile; throws MalformedTile. */
void check_tile_shape(const CollaredTile& t);

/** Puts a nonzero middle entry in position 2 when position 3 is 0. */
EdgeSide canonicalize_side(EdgeSide side);

/** Lexicographic minimum over the side-swap and zero-swap symmetries. */
CollaredEdge canonicalize_edge(const EdgeSide& a, const EdgeSide& b);
bool is_canonical(const CollaredEdge& e);

/** True when the sides fit (i,i',i'',j+1 | j,j',j'',i+1). */
bool follows_edge_pattern(const CollaredEdge& e);

/**
 * Canonical vertex from its clockwise corner cycle. A degree-3 vertex may
 * be given as its 3 corners or as 4 entries containing exactly one 0.
 */
CollaredVertex canonicalize_vertex(std::span<const Decoration> cycle);
bool is_canonical(const CollaredVertex& v);

/** Values strictly between lo and hi walking upward from lo mod 5. */
std::vector<Decoration> cyclic_open_interval(Decoration lo, Decoration hi);

Interior standard_interior();

std::string to_string(Decoration d);
std::string to_string(const DecorationGroup& g);
std::string to_string(const CollaredTile& t);
std::string to_string(const EdgeSide& s);
std::string to_string(const CollaredEdge& e);
std::string to_string(const CollaredVertex& v);

}  // namespace tilespace
