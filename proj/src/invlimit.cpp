#include "tilespace/invlimit.hpp"

namespace tilespace {

namespace {

void check_face(const PentagonDataset& d, int face) {
    if (face < 1 || face > static_cast<int>(d.tiles.size()))
        throw ThreadError("face " + std::to_string(face) + " is not a collared tile");
}

void check_position(int p) {
    if (p < 1 || p > kChildCount)
        throw ThreadError("address " + std::to_string(p) + " is outside 1..6");
}

}  // namespace

std::vector<int> realize(const PentagonDataset& d, const Thread& t) {
    check_face(d, t.base_face);
    std::vector<int> top_down{t.base_face};
    for (int p : t.addresses) {
        check_position(p);
        top_down.push_back(d.rule(top_down.back()).children[static_cast<std::size_t>(p - 1)]);
    }
    return {top_down.rbegin(), top_down.rend()};
}

Thread shift_right(const PentagonDataset& d, const Thread& t) {
    if (t.depth() == 0)
        throw ThreadError("cannot shift a depth-0 thread");
    check_face(d, t.base_face);
    check_position(t.addresses.front());
    Thread out;
    out.base_face = d.rule(t.base_face).children[static_cast<std::size_t>(t.addresses.front() - 1)];
    out.addresses.assign(t.addresses.begin() + 1, t.addresses.end());
    return out;
}

Thread shift_left(const PentagonDataset& d, const Thread& t, int new_base, int position) {
    check_face(d, new_base);
    check_position(position);
    int child = d.rule(new_base).children[static_cast<std::size_t>(position - 1)];
    if (child != t.base_face)
        throw ThreadError("t" + std::to_string(new_base) + " has t" + std::to_string(child) + " at position " +
                          std::to_string(position) + ", not t" + std::to_string(t.base_face));
    Thread out;
    out.base_face = new_base;
    out.addresses.push_back(position);
    out.addresses.insert(out.addresses.end(), t.addresses.begin(), t.addresses.end());
    return out;
}

std::vector<std::pair<int, int>> parents_of(const PentagonDataset& d, int face) {
    std::vector<std::pair<int, int>> out;
    for (const auto& r : d.rules)
        for (int i = 0; i < kChildCount; ++i)
            if (r.children[static_cast<std::size_t>(i)] == face)
                out.emplace_back(r.parent, i + 1);
    return out;
}

std::uint64_t thread_count(std::size_t depth, bool fixed_base) {
    std::uint64_t n = fixed_base ? 1 : static_cast<std::uint64_t>(kTileCount);
    for (std::size_t i = 0; i < depth; ++i)
        n *= kChildCount;
    return n;
}

void enumerate_threads(const PentagonDataset& d, std::size_t depth, int base_face,
                       const std::function<void(const Thread&)>& visit) {
    std::vector<int> bases;
    if (base_face) {
        check_face(d, base_face);
        bases.push_back(base_face);
    } else {
        for (const auto& t : d.tiles)
            bases.push_back(t.id);
    }
    for (int b : bases) {
        Thread t{b, std::vector<int>(depth, 1)};
        while (true) {
            visit(t);
            std::size_t i = depth;
            while (i > 0 && t.addresses[i - 1] == kChildCount)
                t.addresses[--i] = 1;
            if (i == 0)
                break;
            ++t.addresses[i - 1];
        }
    }
}

Thread random_thread(std::size_t depth, const std::function<int(int)>& next) {
    Thread t;
    t.base_face = 1 + next(kTileCount);
    for (std::size_t i = 0; i < depth; ++i)
        t.addresses.push_back(1 + next(kChildCount));
    return t;
}

}  // namespace tilespace
