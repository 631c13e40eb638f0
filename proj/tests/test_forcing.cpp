#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "tilespace/forcing.hpp"

using namespace tilespace;

namespace {

const Placement& placement() {
    static const Placement p = derive_placement(fixtures::dataset());
    return p;
}

}  // namespace

TEST_CASE("collared tiles force their border after one substitution") {
    auto r = verify_border_forcing_k1(fixtures::dataset(), placement());
    CHECK(r.passed());
    CHECK(r.sides.size() == 180);
    CHECK(r.singleton_count() == 180);
    CHECK(r.per_tile.size() == 36);
    for (const auto& s : r.sides)
        CHECK(s.labels.begin()->size() == 2);
}

TEST_CASE("forcing persists one level further") {
    auto r = verify_border_forcing(fixtures::dataset(), placement(), 2);
    CHECK(r.passed());
    for (int id : {1, 9, 17, 22, 36})
        for (int s = 1; s <= 5; ++s) {
            const auto& obs = r.sides[static_cast<std::size_t>((id - 1) * 5 + s - 1)];
            REQUIRE(obs.side.tile == id);
            CHECK(obs.labels.begin()->size() == 4);
        }
}

TEST_CASE("uncollared classes") {
    const auto& d = fixtures::dataset();
    auto classes = uncollared_classes(d);
    CHECK(classes.size() == 11);
    CHECK(undecorated_class_count(d) == 3);
    std::size_t members = 0;
    for (const auto& [type, ids] : classes)
        members += ids.size();
    CHECK(members == 36);
}

TEST_CASE("forgetting collars breaks forcing, with a witness") {
    auto r = verify_uncollared_forcing(fixtures::dataset(), placement());
    CHECK(r.uncollared);
    CHECK_FALSE(r.passed());
    CHECK(r.sides.size() == 55);
    CHECK(r.sides.size() - r.singleton_count() == 20);
    REQUIRE_FALSE(r.counterexamples.empty());
    const auto& c = r.counterexamples.front();
    CHECK_FALSE(c.first_labels.empty());
    CHECK(c.first_labels != c.second_labels);
}

TEST_CASE("a broken rule table shows up as a forcing counterexample") {
    PentagonDataset d = fixtures::dataset();
    Placement p = placement();
    // Pretend tile 5's corner child at V_0 were tile 1 instead.
    p.rules[4].corner[0].tile = p.rules[4].corner[0].tile == 1 ? 2 : 1;
    auto r = verify_border_forcing(d, p, 1);
    CHECK_FALSE(r.passed());
}
