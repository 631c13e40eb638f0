#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "tilespace/collaring.hpp"
#include "tilespace/error.hpp"
#include "tilespace/placement.hpp"

using namespace tilespace;

namespace {

const Placement& placement() {
    static const Placement p = derive_placement(fixtures::dataset());
    return p;
}

}  // namespace

TEST_CASE("every rule has exactly one placement") {
    const auto& d = fixtures::dataset();
    for (const auto& rule : d.rules) {
        auto all = placements_for_rule(d, rule);
        CHECK_MESSAGE(all.size() == 1, "rule " << rule.parent);
    }
    CHECK(placement().ambiguities.empty());
    CHECK(placement().rules.size() == 36);
}

TEST_CASE("placements use each peripheral child once and put t22 in the centre") {
    for (const auto& rp : placement().rules) {
        std::set<int> positions(rp.rule_position.begin(), rp.rule_position.end());
        CHECK(positions == std::set<int>{1, 2, 3, 4, 5});
        CHECK(rp.center.tile == kCentralTile);
        const auto& rule = fixtures::dataset().rule(rp.parent);
        for (std::size_t k = 0; k < 5; ++k)
            CHECK(rp.corner[k].tile == rule.children[static_cast<std::size_t>(rp.rule_position[k])]);
    }
}

TEST_CASE("corner children carry the parent's vertex") {
    const auto& d = fixtures::dataset();
    for (const auto& rp : placement().rules)
        for (int label = 1; label <= 5; ++label) {
            auto spot = corner_child(rp, Decoration(label));
            CHECK(vertex_at(d.tile(spot.tile), spot.label) == vertex_at(d.tile(rp.parent), Decoration(label)));
        }
}

TEST_CASE("patch consistency holds for every rule") {
    const auto& d = fixtures::dataset();
    for (const auto& rule : d.rules) {
        auto r = patch_consistency(d, rule, placement().rule(rule.parent));
        CHECK_MESSAGE(r.passed, "rule " << rule.parent << ": " << (r.problems.empty() ? "" : r.problems[0]));
    }
}

TEST_CASE("internal edges: ten, each a listed edge read both ways") {
    const auto& d = fixtures::dataset();
    for (const auto& rp : placement().rules) {
        auto edges = internal_edges(rp);
        CHECK(edges.size() == 10);
        for (auto [a, b] : edges) {
            auto ra = read_edge(d.tile(a.tile), a.slot);
            auto rb = read_edge(d.tile(b.tile), b.slot);
            CHECK(ra.tail == rb.head);
            CHECK(ra.head == rb.tail);
            CHECK(d.find_edge(edge_from_slot(d.tile(a.tile), a.slot)));
        }
    }
}

TEST_CASE("subdivision keeps the end vertices of an edge") {
    const auto& d = fixtures::dataset();
    for (const auto& t : d.tiles)
        for (int s = 1; s <= 5; ++s) {
            auto pieces = subdivide_edge(placement(), {t.id, s}, 2);
            REQUIRE(pieces.size() == 4);
            // The end vertices of the parent edge survive subdivision.
            CHECK(vertex_at(d.tile(pieces.front().tile), Decoration(pieces.front().slot)) ==
                  vertex_at(t, Decoration(s)));
            CHECK(vertex_at(d.tile(pieces.back().tile), Decoration(pieces.back().slot).next()) ==
                  vertex_at(t, Decoration(s).next()));
        }
}

TEST_CASE("rotating a rule's peripheral children is absorbed by the placement") {
    const auto& d = fixtures::dataset();
    SubstitutionRule rule = d.rule(7);
    SubstitutionRule rotated = rule;
    for (std::size_t i = 1; i <= 5; ++i)
        rotated.children[i] = rule.children[i % 5 + 1];
    auto a = placements_for_rule(d, rule);
    auto b = placements_for_rule(d, rotated);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    for (std::size_t k = 0; k < 5; ++k)
        CHECK(a[0].corner[k] == b[0].corner[k]);
}

TEST_CASE("a rule with a wrong child has no placement") {
    PentagonDataset d = fixtures::dataset();
    std::swap(d.rules[2].children[1], d.rules[2].children[3]);
    CHECK(placements_for_rule(d, d.rules[2]).empty());
    try {
        derive_placement(d);
        FAIL("expected DerivationError");
    } catch (const DerivationError& e) {
        CHECK(std::string(e.what()) == "rule 3: no consistent placement of its children");
    }
}
