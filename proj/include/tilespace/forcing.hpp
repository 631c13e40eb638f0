#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tilespace/collaring.hpp"
#include "tilespace/dataset.hpp"
#include "tilespace/placement.hpp"

namespace tilespace {

/** What lies across one edge side after substitution, over every compatible neighbour. */
struct SideObservation {
    EdgeSlot side;
    std::vector<EdgeSlot> neighbors;
    std::set<std::vector<int>> labels;  // child sequence along the shared edge, per neighbour
    bool singleton() const { return labels.size() == 1; }
};

struct ForcingCounterexample {
    EdgeSlot side;
    EdgeSlot first_neighbor;
    std::vector<int> first_labels;
    EdgeSlot second_neighbor;
    std::vector<int> second_labels;
};

/**
 * Edge-level forcing only: tiles touching the patch at a single point are
 * not examined.
 */
struct ForcingReport {
    int level = 1;
    bool uncollared = false;
    std::vector<SideObservation> sides;
    std::map<int, bool> per_tile;
    std::vector<ForcingCounterexample> counterexamples;

    bool passed() const { return counterexamples.empty(); }
    std::size_t singleton_count() const;
};

/**
 * For every (tile, slot) and every compatible neighbour (u, s'), records the
 * level-n children of u along the shared edge. Passes when each side sees
 * one sequence only.
 */
ForcingReport verify_border_forcing(const PentagonDataset& d, const Placement& p, int level = 1);
ForcingReport verify_border_forcing_k1(const PentagonDataset& d, const Placement& p);

/**
 * A tile without its collar: the vertex degrees by interior label.
 * The interior is always (1,2,3,4,5) after normalization, so this is the class.
 */
struct UncollaredType {
    std::array<int, 5> degrees{};
    friend auto operator<=>(const UncollaredType&, const UncollaredType&) = default;
};

UncollaredType uncollared_projection(const CollaredTile& t);

/** Distinct classes with their member tiles, in class order. */
std::map<UncollaredType, std::vector<int>> uncollared_classes(const PentagonDataset& d);

/** Classes also ignoring the interior decoration: degree patterns up to rotation. */
std::size_t undecorated_class_count(const PentagonDataset& d);

/**
 * The same check after forgetting collars: neighbours are any tiles whose
 * class shows the right degrees at the shared edge, and children are read
 * as classes. Expected to fail.
 */
ForcingReport verify_uncollared_forcing(const PentagonDataset& d, const Placement& p);

}  // namespace tilespace
