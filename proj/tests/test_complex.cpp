#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "tilespace/collaring.hpp"
#include "tilespace/complex.hpp"

using namespace tilespace;

namespace {

const CWComplex& gamma() {
    static const CWComplex c = build_complex(fixtures::dataset());
    return c;
}

const ChainMaps& maps() {
    static const ChainMaps m = chain_maps(fixtures::dataset(), derive_placement(fixtures::dataset()), gamma());
    return m;
}

Integer abs_row_sum(const IntegerMatrix& m, std::size_t r) {
    Integer s = 0;
    for (std::size_t c = 0; c < m.cols(); ++c)
        s += m(r, c) < 0 ? Integer(-m(r, c)) : m(r, c);
    return s;
}

std::size_t count_lines_with(const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    std::size_t n = 0;
    for (std::string l; std::getline(in, l);)
        n += l.find(needle) != std::string::npos;
    return n;
}

// Two disjoint triangles.
CWComplex two_triangles() {
    CWComplex c;
    c.cells = {6, 6};
    IntegerMatrix b(6, 6);
    for (std::size_t t = 0; t < 2; ++t)
        for (std::size_t i = 0; i < 3; ++i) {
            b(3 * t + i, 3 * t + i) = -1;
            b(3 * t + (i + 1) % 3, 3 * t + i) = 1;
        }
    c.boundary = {b};
    return c;
}

}  // namespace

TEST_CASE("cell counts and Euler characteristic") {
    CHECK(gamma().cells == std::vector<std::size_t>{10, 45, 36});
    CHECK(gamma().euler_characteristic() == 1);
}

TEST_CASE("boundary of a boundary vanishes") {
    CHECK(boundary_problems(gamma()).empty());
    CHECK((gamma().boundary[0] * gamma().boundary[1]).is_zero());
}

TEST_CASE("edge boundaries are head minus tail") {
    const auto& d = fixtures::dataset();
    const auto& b1 = gamma().boundary[0];
    for (const auto& e : d.edges) {
        auto [a, b] = vertices_from_edge(e);
        auto tail = static_cast<std::size_t>(*d.find_vertex(a) - 1);
        auto head = static_cast<std::size_t>(*d.find_vertex(b) - 1);
        auto col = static_cast<std::size_t>(e.id - 1);
        for (std::size_t v = 0; v < 10; ++v) {
            Integer expected = (v == head ? 1 : 0) - (v == tail ? 1 : 0);
            CHECK(b1(v, col) == expected);
        }
    }
}

TEST_CASE("each face boundary uses five edge slots") {
    const auto& d = fixtures::dataset();
    auto inc = incidence_table(d);
    const auto& b2 = gamma().boundary[1];
    for (std::size_t f = 0; f < 36; ++f) {
        // Signed count per edge, rebuilt from slot readings.
        std::vector<int> expected(45, 0);
        for (int s = 1; s <= 5; ++s) {
            const auto& t = d.tiles[f];
            auto e = edge_from_slot(t, s);
            expected[static_cast<std::size_t>(*d.find_edge(e) - 1)] += orientation(read_edge(t, s), e);
        }
        for (std::size_t e = 0; e < 45; ++e)
            CHECK(b2(e, f) == expected[e]);
        CHECK(inc.tile_edges[f].size() == 5);
    }
}

TEST_CASE("connectivity") {
    CHECK(connectivity(gamma()) == 1);
    CHECK(connectivity(CWComplex{}) == 0);
    CHECK(connectivity(two_triangles()) == 2);

    // Independent union-find over the edge table.
    const auto& d = fixtures::dataset();
    std::vector<int> parent(11);
    for (int i = 0; i <= 10; ++i)
        parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)];
        return x;
    };
    for (const auto& e : d.edges) {
        auto [a, b] = vertices_from_edge(e);
        parent[static_cast<std::size_t>(find(*d.find_vertex(a)))] = find(*d.find_vertex(b));
    }
    std::set<int> roots;
    for (int v = 1; v <= 10; ++v)
        roots.insert(find(v));
    CHECK(roots.size() == 1);
}

TEST_CASE("chain maps commute with the boundaries") {
    CHECK_FALSE(commutation_failure(gamma(), maps()));
    for (std::size_t d = 1; d < 3; ++d)
        CHECK(gamma().boundary[d - 1] * maps().maps[d].transpose() ==
              maps().maps[d - 1].transpose() * gamma().boundary[d - 1]);
}

TEST_CASE("face map counts children") {
    const auto& d = fixtures::dataset();
    const auto& s2 = maps().maps[2];
    for (const auto& rule : d.rules)
        for (int j = 1; j <= 36; ++j) {
            auto expected = std::count(rule.children.begin(), rule.children.end(), j);
            CHECK(s2(static_cast<std::size_t>(rule.parent - 1), static_cast<std::size_t>(j - 1)) == expected);
        }
}

TEST_CASE("row sums of the absolute chain maps") {
    for (std::size_t r = 0; r < 36; ++r)
        CHECK(abs_row_sum(maps().maps[2], r) == 6);
    for (std::size_t r = 0; r < 45; ++r)
        CHECK(abs_row_sum(maps().maps[1], r) == 2);
    for (std::size_t r = 0; r < 10; ++r)
        CHECK(abs_row_sum(maps().maps[0], r) == 1);
}

TEST_CASE("Perron eigenvalue of the face map is 6") {
    auto cert = perron_certificate(entrywise_abs(maps().maps[2]));
    CHECK(cert.holds());
    CHECK(cert.row_sum == 6);
    CHECK_FALSE(perron_certificate(IntegerMatrix{{1, 2}, {0, 1}}).holds());
}

TEST_CASE("two-level chain maps are the composite") {
    const auto& d = fixtures::dataset();
    auto m2 = chain_maps_power(d, derive_placement(d), gamma(), 2);
    CHECK(compose(maps(), maps()).maps == m2.maps);
    CHECK_FALSE(commutation_failure(gamma(), m2));
}

TEST_CASE("DOT export") {
    std::string dot = export_dot(gamma());
    CHECK(dot == export_dot(gamma()));
    CHECK(dot.rfind("digraph gamma {", 0) == 0);
    CHECK(count_lines_with(dot, "label=\"v") == 10);
    CHECK(count_lines_with(dot, " -> ") == 45);
    std::string with_faces = export_dot(gamma(), {.faces = true});
    CHECK(count_lines_with(with_faces, "[label=\"t") == 36);
}

TEST_CASE("row order of the input files does not matter") {
    DatasetText text = read_dataset_dir(fixtures::data_dir());
    auto shuffle_rows = [](const std::string& csv, unsigned seed) {
        std::istringstream in(csv);
        std::string header, l;
        std::getline(in, header);
        std::vector<std::string> rows;
        while (std::getline(in, l))
            rows.push_back(l);
        std::shuffle(rows.begin(), rows.end(), std::mt19937(seed));
        std::string out = header + "\n";
        for (const auto& r : rows)
            out += r + "\n";
        return out;
    };
    text.tiles = shuffle_rows(text.tiles, 1);
    text.edges = shuffle_rows(text.edges, 2);
    text.vertices = shuffle_rows(text.vertices, 3);
    text.rules = shuffle_rows(text.rules, 4);
    PentagonDataset d = parse_dataset(text);
    CWComplex c = build_complex(d);
    CHECK(c.boundary == gamma().boundary);
    CHECK(chain_maps(d, derive_placement(d), c).maps == maps().maps);
}

TEST_CASE("observed multiplicities: no face meets an edge twice, five loops") {
    auto mult = boundary_multiplicities(gamma());
    REQUIRE(mult.size() == 2);
    CHECK(mult[1] == 1);
    const auto& b2 = gamma().boundary[1];
    for (std::size_t f = 0; f < 36; ++f) {
        Integer sum = 0;
        for (std::size_t e = 0; e < 45; ++e)
            sum += b2(e, f) < 0 ? Integer(-b2(e, f)) : b2(e, f);
        CHECK(sum == 5);
    }
    const auto& b1 = gamma().boundary[0];
    int loops = 0;
    for (std::size_t e = 0; e < 45; ++e) {
        bool zero = true;
        for (std::size_t v = 0; v < 10; ++v)
            zero = zero && b1(v, e) == 0;
        loops += zero;
    }
    CHECK(loops == 5);
}
