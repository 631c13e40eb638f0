#include <doctest.h>

#include "fixtures.hpp"
#include "tilespace/collaring.hpp"
#include "tilespace/core.hpp"
#include "tilespace/error.hpp"

using namespace tilespace;

namespace {

Decoration D(int v) { return Decoration(v); }

EdgeSide side(int a, int b, int c, int d) { return {D(a), D(b), D(c), D(d)}; }

}  // namespace

TEST_CASE("decorations are cyclic and 0 is inert") {
    CHECK(D(5).next() == D(1));
    CHECK(D(1).prev() == D(5));
    CHECK(Decoration::cyclic(-3) == D(2));
    CHECK(Decoration::cyclic(12) == D(2));
    CHECK_THROWS_AS(D(0).next(), DecorationError);
    CHECK_THROWS_AS(Decoration(6), DecorationError);
    CHECK_THROWS_AS(Decoration(-1), DecorationError);
}

TEST_CASE("cyclic open interval") {
    auto iv = cyclic_open_interval(D(4), D(2));
    REQUIRE(iv.size() == 2);
    CHECK(iv[0] == D(5));
    CHECK(iv[1] == D(1));
    CHECK(cyclic_open_interval(D(2), D(3)).empty());
}

TEST_CASE("normalize_tile rotates the exterior to interior 1") {
    const auto& t1 = fixtures::dataset().tile(1);
    // Same tile written starting from interior vertex 3.
    Interior in{D(3), D(4), D(5), D(1), D(2)};
    Exterior ex{};
    for (std::size_t k = 0; k < 5; ++k)
        ex[k] = t1.exterior[(k + 2) % 5];
    CHECK(normalize_tile(in, ex) == t1);
    CHECK(normalize_tile(standard_interior(), t1.exterior) == t1);

    Interior bad{D(1), D(3), D(2), D(4), D(5)};
    CHECK_THROWS_AS(normalize_tile(bad, t1.exterior), MalformedTile);
}

TEST_CASE("tile 1 prints in table order") {
    CHECK(to_string(fixtures::dataset().tile(1)) == "(4,3,0 | 5,4,1 | 2,1,0 | 2,1,2 | 4,3,0)");
}

TEST_CASE("edge canonicalization picks the lexicographic minimum") {
    auto e = canonicalize_edge(side(3, 4, 1, 2), side(1, 0, 2, 4));
    CHECK(to_string(e) == "(1,0,2,4 | 3,4,1,2)");
    CHECK(is_canonical(e));
    CHECK(follows_edge_pattern(e));
    CHECK(canonicalize_side(side(1, 2, 0, 4)) == side(1, 0, 2, 4));
    CHECK(canonicalize_side(side(1, 0, 2, 4)) == side(1, 0, 2, 4));
    CHECK_THROWS_AS(canonicalize_edge(side(1, 0, 0, 4), side(3, 4, 1, 2)), MalformedEdge);
}

TEST_CASE("edge canonicalization is invariant under its symmetry orbit") {
    // A zero middle entry may sit on either side of the other one.
    auto move_zero = [](EdgeSide s) {
        if (s[1].absent() || s[2].absent())
            std::swap(s[1], s[2]);
        return s;
    };
    for (const auto& e : fixtures::dataset().edges) {
        CHECK(canonicalize_edge(e.side_b, e.side_a) == e);
        CHECK(canonicalize_edge(move_zero(e.side_a), e.side_b) == e);
        CHECK(canonicalize_edge(move_zero(e.side_b), move_zero(e.side_a)) == e);
    }
}

TEST_CASE("vertex canonicalization is invariant under rotation") {
    for (const auto& v : fixtures::dataset().vertices) {
        CHECK(is_canonical(v));
        std::vector<Decoration> nonzero;
        for (auto c : v.corners)
            if (!c.absent())
                nonzero.push_back(c);
        for (std::size_t r = 0; r < nonzero.size(); ++r) {
            std::vector<Decoration> rot(nonzero.size());
            for (std::size_t i = 0; i < nonzero.size(); ++i)
                rot[i] = nonzero[(i + r) % nonzero.size()];
            CHECK(canonicalize_vertex(rot) == v);
        }
    }
}

TEST_CASE("degree-3 vertices take three corners or four with one zero") {
    std::vector<Decoration> three{D(2), D(4), D(1)};
    auto v = canonicalize_vertex(three);
    CHECK(v.degree() == 3);
    CHECK(to_string(v) == "(1,0,2,4)");
    std::vector<Decoration> four{D(4), D(1), D(0), D(2)};
    CHECK(canonicalize_vertex(four) == v);
    std::vector<Decoration> two{D(1), D(2)};
    CHECK_THROWS_AS(canonicalize_vertex(two), MalformedVertex);
}

TEST_CASE("check_tile_shape rejects a zero in a middle slot") {
    CollaredTile t = fixtures::dataset().tile(1);
    CHECK_NOTHROW(check_tile_shape(t));
    t.exterior[0][0] = D(0);
    CHECK_THROWS_AS(check_tile_shape(t), MalformedTile);
}
