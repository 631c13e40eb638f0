#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "tilespace/collaring.hpp"
#include "tilespace/dataset.hpp"

namespace tilespace {

/** A child tile and the interior label it shows at a reference point of the patch. */
struct ChildSpot {
    int tile = 0;
    Decoration label;
    friend bool operator==(const ChildSpot&, const ChildSpot&) = default;
};

/**
 * Where the children of one rule sit. The parent's corner with label k+1 is
 * V_k; the midpoint of parent slot k+1 is M_k; the inner vertex shared by the
 * centre child and the corner children at V_k and V_{k+1} is C_k.
 */
struct RulePlacement {
    int parent = 0;
    std::array<int, 5> rule_position{};  // index into children (1..5) of the child at V_k
    std::array<ChildSpot, 5> corner{};   // child at V_k and its label there
    ChildSpot center;                    // central child and its label at C_0

    friend bool operator==(const RulePlacement&, const RulePlacement&) = default;
};

struct Placement {
    std::vector<RulePlacement> rules;     // by parent id - 1
    std::vector<std::string> ambiguities;

    const RulePlacement& rule(int parent) const { return rules.at(static_cast<std::size_t>(parent - 1)); }
};

/**
 * Searches, per rule, the cyclic assignments of peripheral children to parent
 * corners (both directions) and the labels each child shows, keeping those
 * whose internal edges are listed collared edges read consistently from both
 * sides and whose boundary vertices agree with the parent's collar. Throws
 * DerivationError naming the rule when nothing fits; extra fits are logged
 * in `ambiguities` and the first is kept.
 */
Placement derive_placement(const PentagonDataset& d);

/** Search for a single rule; returns every consistent placement. */
std::vector<RulePlacement> placements_for_rule(const PentagonDataset& d, const SubstitutionRule& rule);

/** The two child slots covering parent slot s, in the parent's direction. */
std::array<EdgeSlot, 2> boundary_halves(const RulePlacement& rp, int parent_slot);

/** The ten child-child edges as pairs of opposite readings. */
std::vector<std::pair<EdgeSlot, EdgeSlot>> internal_edges(const RulePlacement& rp);

/** The child sitting at the parent corner with this label, and its label there. */
ChildSpot corner_child(const RulePlacement& rp, Decoration parent_label);

/** Child slots covering (tile, slot) after `levels` substitutions, in order. */
std::vector<EdgeSlot> subdivide_edge(const Placement& p, EdgeSlot side, int levels);

/**
 * Checks one rule against a placement: every internal edge must be a listed
 * collared edge read consistently from both children.
 */
struct PatchReport {
    int parent = 0;
    bool passed = true;
    std::vector<std::string> problems;
};
PatchReport patch_consistency(const PentagonDataset& d, const SubstitutionRule& rule, const RulePlacement& rp);

}  // namespace tilespace
