#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tilespace/dataset.hpp"

namespace tilespace {

/**
 * A point of the inverse limit truncated at depth n, at face resolution:
 * the face at level n plus child positions (p_n, ..., p_1), so that the face
 * at level i-1 is child p_i of the face at level i.
 */
struct Thread {
    int base_face = 0;
    std::vector<int> addresses;  // addresses[0] = p_n

    std::size_t depth() const { return addresses.size(); }
    friend bool operator==(const Thread&, const Thread&) = default;
};

/** (x_0, ..., x_n) with x_n the base face. Throws ThreadError on bad addresses. */
std::vector<int> realize(const PentagonDataset& d, const Thread& t);

/** Drops the deepest level. Throws ThreadError at depth 0. */
Thread shift_right(const PentagonDataset& d, const Thread& t);

/**
 * Adds a level above: new_base must list the old base at `position`
 * (1..6). Throws ThreadError otherwise.
 */
Thread shift_left(const PentagonDataset& d, const Thread& t, int new_base, int position);

/** Every (parent, position) whose child is `face`. */
std::vector<std::pair<int, int>> parents_of(const PentagonDataset& d, int face);

/** Number of depth-n threads: 36 * 6^n, or 6^n for a fixed base. */
std::uint64_t thread_count(std::size_t depth, bool fixed_base = false);

/**
 * Calls `visit` on every thread of the given depth in lexicographic order
 * (base, then addresses); base_face 0 means all bases.
 */
void enumerate_threads(const PentagonDataset& d, std::size_t depth, int base_face,
                       const std::function<void(const Thread&)>& visit);

/** `next(n)` returns a value in 0..n-1; addresses come from next(6), the base from next(36). */
Thread random_thread(std::size_t depth, const std::function<int(int)>& next);

}  // namespace tilespace
