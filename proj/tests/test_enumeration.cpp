#include <doctest.h>

#include <map>
#include <set>

#include "fixtures.hpp"
#include "tilespace/enumeration.hpp"

using namespace tilespace;

TEST_CASE("pattern rows: twenty rows, one y5 each") {
    const auto& rows = embedded_pattern_rows();
    REQUIRE(rows.size() == 20);
    for (const auto& r : rows) {
        int marks = 0;
        for (const auto& g : r.groups)
            for (int x : g)
                marks += x == kY5;
        CHECK(marks == 1);
    }
}

TEST_CASE("the embedded table is what the formula generates") {
    auto formula = pattern_two_rows_from_formula();
    auto embedded = embedded_pattern_rows();
    REQUIRE(formula.size() == embedded.size());
    auto key = [](const PatternRow& r) {
        return std::make_tuple(r.groups, r.lo.value(), r.hi.value(), r.allow_zero);
    };
    std::set<decltype(key(formula[0]))> a, b;
    for (const auto& r : formula)
        a.insert(key(r));
    for (const auto& r : embedded)
        b.insert(key(r));
    CHECK(a == b);
}

TEST_CASE("y5 = 0 is excluded on exactly rows 3, 7, 11, 15, 19") {
    std::map<int, ForbiddenDecorations> expected{
        {3, {1, 2, 5}}, {7, {1, 2, 3}}, {11, {2, 3, 4}}, {15, {3, 4, 5}}, {19, {1, 4, 5}}};
    std::set<ForbiddenDecorations> found;
    for (const auto& r : embedded_pattern_rows()) {
        auto reason = exclusion_reason(r);
        if (expected.count(r.id)) {
            REQUIRE_MESSAGE(reason, "row " << r.id);
            CHECK(*reason == expected[r.id]);
            found.insert(*reason);
        } else {
            CHECK_MESSAGE(!reason, "row " << r.id);
        }
    }
    CHECK(found == std::set<ForbiddenDecorations>{{1, 2, 5}, {1, 2, 3}, {1, 4, 5}, {2, 3, 4}, {3, 4, 5}});
}

TEST_CASE("the excluded corner sets are not collared vertices") {
    for (const auto& r : embedded_pattern_rows())
        if (auto reason = exclusion_reason(r)) {
            std::vector<Decoration> corners{Decoration((*reason)[0]), Decoration((*reason)[1]),
                                            Decoration((*reason)[2])};
            // Either orientation of the three corners.
            auto v1 = canonicalize_vertex(corners);
            std::swap(corners[1], corners[2]);
            auto v2 = canonicalize_vertex(corners);
            CHECK_FALSE(fixtures::dataset().find_vertex(v1));
            CHECK_FALSE(fixtures::dataset().find_vertex(v2));
        }
}

TEST_CASE("per-row candidate counts add up to 35") {
    std::size_t total = 0, with_exclusion = 0, without = 0;
    for (const auto& r : embedded_pattern_rows()) {
        auto kept = expand_pattern_row(r);
        auto all = expand_pattern_row(r, false);
        total += kept.size();
        // Range size: the open interval between lo and hi, plus 0 when allowed.
        std::size_t expected = cyclic_open_interval(r.lo, r.hi).size() + (r.allow_zero ? 1 : 0);
        CHECK(all.size() == expected);
        (all.size() == kept.size() ? without : with_exclusion) += 1;
    }
    CHECK(total == 35);
    CHECK(with_exclusion == 5);
    CHECK(without == 15);
}

TEST_CASE("pattern (1) is the same tile for every x") {
    auto t = pattern_one_tile();
    CHECK(to_string(t) == "(5,4,0 | 1,5,0 | 2,1,0 | 3,2,0 | 4,3,0)");
}

TEST_CASE("enumeration reproduces the tile table exactly") {
    auto r = enumerate_and_match(fixtures::dataset());
    CHECK(r.pattern_two.size() == 35);
    CHECK(r.tiles.size() == 36);
    CHECK(compare_tiles(r.tiles, fixtures::dataset().tiles).empty());
    std::set<CollaredTile> distinct;
    for (const auto& c : r.pattern_two)
        distinct.insert(c.tile);
    CHECK(distinct.size() == 35);
    CHECK_FALSE(distinct.count(r.pattern_one));
}

TEST_CASE("without the exclusion the extra tiles are exactly the y5 = 0 ones") {
    std::set<CollaredTile> listed(fixtures::dataset().tiles.begin(), fixtures::dataset().tiles.end());
    int extra = 0;
    for (const auto& r : embedded_pattern_rows())
        for (const auto& c : expand_pattern_row(r, false))
            if (!listed.count(c.tile)) {
                ++extra;
                CHECK(c.y5.absent());
                CHECK(exclusion_reason(r));
            }
    CHECK(extra == 5);
}

TEST_CASE("compare_tiles reports both directions") {
    std::vector<CollaredTile> listed = fixtures::dataset().tiles;
    std::vector<CollaredTile> derived(listed.begin() + 1, listed.end());
    CollaredTile odd = listed[0];
    odd.exterior[3][2] = Decoration(5);
    derived.push_back(odd);
    auto diff = compare_tiles(derived, listed);
    REQUIRE(diff.missing.size() == 1);
    REQUIRE(diff.extra.size() == 1);
    CHECK(diff.missing[0] == listed[0]);
    CHECK(diff.extra[0] == odd);
}

TEST_CASE("a table with a tile removed raises a mismatch") {
    PentagonDataset d = fixtures::dataset();
    d.tiles[4].exterior[3][2] = Decoration(5);
    CHECK_THROWS_AS(enumerate_and_match(d), EnumerationMismatch);
}
