#include "tilespace/placement.hpp"

#include <set>

namespace tilespace {

namespace {

int slot_from(Decoration label) { return label.value(); }

std::size_t idx(int k) { return static_cast<std::size_t>(((k % 5) + 5) % 5); }

bool same_vertex(const std::array<Decoration, 4>& a, const std::array<Decoration, 4>& b) {
    return canonicalize_vertex(a) == canonicalize_vertex(b);
}

bool same_vertex3(const std::array<Decoration, 4>& a, const std::array<Decoration, 3>& b) {
    return canonicalize_vertex(a) == canonicalize_vertex(b);
}

// Boundary vertices of the patch: the corners V_k and the midpoints M_k.
bool boundary_fits(const PentagonDataset& d, const RulePlacement& rp) {
    const CollaredTile& parent = d.tile(rp.parent);
    for (int k = 0; k < 5; ++k) {
        const ChildSpot& here = rp.corner[idx(k)];
        const ChildSpot& next = rp.corner[idx(k + 1)];
        const auto& grp = parent.exterior[idx(k)];
        std::array<Decoration, 4> mid = {here.label.next(), grp[1], grp[0], next.label.prev()};
        if (!same_vertex(corner_cycle(d.tile(here.tile), here.label.next()), mid))
            return false;
        if (!same_vertex(corner_cycle(d.tile(next.tile), next.label.prev()), mid))
            return false;
    }
    return true;
}

// Inner vertices C_k: degree 3, clockwise (centre, corner child k, corner child k+1).
bool inner_vertices_fit(const PentagonDataset& d, const RulePlacement& rp) {
    for (int k = 0; k < 5; ++k) {
        const ChildSpot& a = rp.corner[idx(k)];
        const ChildSpot& b = rp.corner[idx(k + 1)];
        Decoration c = rp.center.label.shifted(k);
        std::array<Decoration, 3> expect = {c, a.label.shifted(2), b.label.shifted(3)};
        if (!same_vertex3(corner_cycle(d.tile(rp.center.tile), c), expect) ||
            !same_vertex3(corner_cycle(d.tile(a.tile), a.label.shifted(2)), expect) ||
            !same_vertex3(corner_cycle(d.tile(b.tile), b.label.shifted(3)), expect))
            return false;
    }
    return true;
}

std::vector<std::string> internal_edge_problems(const PentagonDataset& d, const RulePlacement& rp,
                                                bool stop_early) {
    std::vector<std::string> problems;
    for (auto [x, y] : internal_edges(rp)) {
        OrientedEdge rx = read_edge(d.tile(x.tile), x.slot);
        OrientedEdge ry = read_edge(d.tile(y.tile), y.slot);
        std::string where = "t" + std::to_string(x.tile) + " slot " + std::to_string(x.slot) + " / t" +
                            std::to_string(y.tile) + " slot " + std::to_string(y.slot);
        if (!(rx.tail == ry.head && rx.head == ry.tail)) {
            problems.push_back(where + ": sides disagree, " + to_string(rx.tail) + " | " + to_string(rx.head) +
                               " vs " + to_string(ry.head) + " | " + to_string(ry.tail));
        } else {
            CollaredEdge e = canonicalize_edge(rx.tail, rx.head);
            if (!d.find_edge(e))
                problems.push_back(where + ": " + to_string(e) + " is not a collared edge");
        }
        if (stop_early && !problems.empty())
            break;
    }
    return problems;
}

}  // namespace

std::array<EdgeSlot, 2> boundary_halves(const RulePlacement& rp, int parent_slot) {
    int k = parent_slot - 1;
    const ChildSpot& a = rp.corner[idx(k)];
    const ChildSpot& b = rp.corner[idx(k + 1)];
    return {EdgeSlot{a.tile, slot_from(a.label)}, EdgeSlot{b.tile, slot_from(b.label.prev())}};
}

std::vector<std::pair<EdgeSlot, EdgeSlot>> internal_edges(const RulePlacement& rp) {
    std::vector<std::pair<EdgeSlot, EdgeSlot>> out;
    for (int k = 0; k < 5; ++k) {
        const ChildSpot& a = rp.corner[idx(k)];
        const ChildSpot& b = rp.corner[idx(k + 1)];
        // Spoke M_k - C_k between neighbouring corner children.
        out.push_back({{a.tile, slot_from(a.label.shifted(1))}, {b.tile, slot_from(b.label.shifted(3))}});
    }
    for (int k = 0; k < 5; ++k) {
        const ChildSpot& a = rp.corner[idx(k)];
        // Edge C_{k-1} - C_k between the centre and corner child k.
        out.push_back({{a.tile, slot_from(a.label.shifted(2))}, {rp.center.tile, slot_from(rp.center.label.shifted(k - 1))}});
    }
    return out;
}

ChildSpot corner_child(const RulePlacement& rp, Decoration parent_label) {
    return rp.corner[static_cast<std::size_t>(parent_label.value() - 1)];
}

std::vector<RulePlacement> placements_for_rule(const PentagonDataset& d, const SubstitutionRule& rule) {
    const CollaredTile& parent = d.tile(rule.parent);
    std::vector<RulePlacement> found;
    for (int dir : {1, -1})
        for (int shift = 0; shift < 5; ++shift) {
            RulePlacement rp;
            rp.parent = rule.parent;
            std::array<std::vector<Decoration>, 5> options;
            for (int k = 0; k < 5; ++k) {
                int pos = 1 + static_cast<int>(idx(shift + dir * k));
                rp.rule_position[idx(k)] = pos;
                const CollaredTile& child = d.tile(rule.children[static_cast<std::size_t>(pos)]);
                auto at_corner = corner_cycle(parent, Decoration(k + 1));
                for (int r = 1; r <= 5; ++r)
                    if (same_vertex(corner_cycle(child, Decoration(r)), at_corner))
                        options[idx(k)].push_back(Decoration(r));
            }
            // Walk the product of per-corner label options.
            std::array<std::size_t, 5> pick{};
            while (true) {
                bool empty = false;
                for (int k = 0; k < 5; ++k) {
                    if (options[idx(k)].empty()) {
                        empty = true;
                        break;
                    }
                    rp.corner[idx(k)] = {rule.children[static_cast<std::size_t>(rp.rule_position[idx(k)])],
                                         options[idx(k)][pick[idx(k)]]};
                }
                if (empty)
                    break;
                if (boundary_fits(d, rp))
                    for (int c = 1; c <= 5; ++c) {
                        rp.center = {rule.children[0], Decoration(c)};
                        if (inner_vertices_fit(d, rp) && internal_edge_problems(d, rp, true).empty())
                            found.push_back(rp);
                    }
                std::size_t k = 0;
                while (k < 5 && ++pick[k] == options[k].size())
                    pick[k++] = 0;
                if (k == 5)
                    break;
            }
        }
    return found;
}

Placement derive_placement(const PentagonDataset& d) {
    Placement p;
    for (const auto& rule : d.rules) {
        auto found = placements_for_rule(d, rule);
        if (found.empty())
            throw DerivationError("rule " + std::to_string(rule.parent) + ": no consistent placement of its children");
        if (found.size() > 1)
            p.ambiguities.push_back("rule " + std::to_string(rule.parent) + ": " + std::to_string(found.size()) +
                                    " consistent placements, first kept");
        p.rules.push_back(found.front());
    }
    return p;
}

std::vector<EdgeSlot> subdivide_edge(const Placement& p, EdgeSlot side, int levels) {
    std::vector<EdgeSlot> cur{side};
    for (int l = 0; l < levels; ++l) {
        std::vector<EdgeSlot> next;
        for (const auto& s : cur)
            for (const auto& half : boundary_halves(p.rule(s.tile), s.slot))
                next.push_back(half);
        cur = std::move(next);
    }
    return cur;
}

PatchReport patch_consistency(const PentagonDataset& d, const SubstitutionRule& rule, const RulePlacement& rp) {
    RulePlacement actual = rp;
    actual.center.tile = rule.children[0];
    for (int k = 0; k < 5; ++k)
        actual.corner[idx(k)].tile = rule.children[static_cast<std::size_t>(rp.rule_position[idx(k)])];
    PatchReport r;
    r.parent = rule.parent;
    r.problems = internal_edge_problems(d, actual, false);
    r.passed = r.problems.empty();
    return r;
}

}  // namespace tilespace
