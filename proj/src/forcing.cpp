#include "tilespace/forcing.hpp"

#include <algorithm>

namespace tilespace {

std::size_t ForcingReport::singleton_count() const {
    return static_cast<std::size_t>(
        std::count_if(sides.begin(), sides.end(), [](const SideObservation& s) { return s.singleton(); }));
}

namespace {

struct SlotAtlas {
    std::map<EdgeSlot, OrientedEdge> reading;

    explicit SlotAtlas(const PentagonDataset& d) {
        for (const auto& t : d.tiles)
            for (int s = 1; s <= 5; ++s)
                reading[{t.id, s}] = read_edge(t, s);
    }

    std::vector<EdgeSlot> neighbors(EdgeSlot side) const {
        const OrientedEdge& mine = reading.at(side);
        std::vector<EdgeSlot> out;
        for (const auto& [slot, r] : reading)
            if (r.tail == mine.head && r.head == mine.tail)
                out.push_back(slot);
        return out;
    }
};

std::vector<int> children_along(const Placement& p, EdgeSlot side, int level) {
    std::vector<int> ids;
    for (const auto& piece : subdivide_edge(p, side, level))
        ids.push_back(piece.tile);
    return ids;
}

void collect_counterexample(ForcingReport& r, const SideObservation& obs,
                            const std::vector<std::pair<EdgeSlot, std::vector<int>>>& seen) {
    if (obs.singleton() || obs.labels.empty())
        return;
    ForcingCounterexample cx;
    cx.side = obs.side;
    cx.first_neighbor = seen.front().first;
    cx.first_labels = seen.front().second;
    for (const auto& [n, labels] : seen)
        if (labels != cx.first_labels) {
            cx.second_neighbor = n;
            cx.second_labels = labels;
            break;
        }
    r.counterexamples.push_back(cx);
}

}  // namespace

ForcingReport verify_border_forcing(const PentagonDataset& d, const Placement& p, int level) {
    SlotAtlas atlas(d);
    ForcingReport r;
    r.level = level;
    for (const auto& t : d.tiles) {
        bool tile_ok = true;
        for (int s = 1; s <= 5; ++s) {
            SideObservation obs;
            obs.side = {t.id, s};
            obs.neighbors = atlas.neighbors(obs.side);
            std::vector<std::pair<EdgeSlot, std::vector<int>>> seen;
            for (const auto& n : obs.neighbors) {
                auto labels = children_along(p, n, level);
                obs.labels.insert(labels);
                seen.emplace_back(n, labels);
            }
            // A side with no neighbour at all is as bad as an ambiguous one.
            if (obs.labels.empty())
                r.counterexamples.push_back({obs.side, {}, {}, {}, {}});
            collect_counterexample(r, obs, seen);
            tile_ok = tile_ok && obs.singleton();
            r.sides.push_back(std::move(obs));
        }
        r.per_tile[t.id] = tile_ok;
    }
    return r;
}

ForcingReport verify_border_forcing_k1(const PentagonDataset& d, const Placement& p) {
    return verify_border_forcing(d, p, 1);
}

UncollaredType uncollared_projection(const CollaredTile& t) {
    UncollaredType u;
    for (int label = 1; label <= 5; ++label)
        u.degrees[static_cast<std::size_t>(label - 1)] =
            corner_cycle(t, Decoration(label))[2].absent() ? 3 : 4;
    return u;
}

std::map<UncollaredType, std::vector<int>> uncollared_classes(const PentagonDataset& d) {
    std::map<UncollaredType, std::vector<int>> out;
    for (const auto& t : d.tiles)
        out[uncollared_projection(t)].push_back(t.id);
    return out;
}

std::size_t undecorated_class_count(const PentagonDataset& d) {
    std::set<std::array<int, 5>> shapes;
    for (const auto& [type, members] : uncollared_classes(d)) {
        std::array<int, 5> best = type.degrees;
        for (int r = 1; r < 5; ++r) {
            std::array<int, 5> rot{};
            for (std::size_t i = 0; i < 5; ++i)
                rot[i] = type.degrees[(i + static_cast<std::size_t>(r)) % 5];
            best = std::min(best, rot);
        }
        shapes.insert(best);
    }
    return shapes.size();
}

ForcingReport verify_uncollared_forcing(const PentagonDataset& d, const Placement& p) {
    SlotAtlas atlas(d);
    auto classes = uncollared_classes(d);
    std::map<int, int> class_of;
    int index = 0;
    for (const auto& [type, members] : classes) {
        ++index;
        for (int id : members)
            class_of[id] = index;
    }

    ForcingReport r;
    r.uncollared = true;
    index = 0;
    for (const auto& [type, members] : classes) {
        ++index;
        bool class_ok = true;
        for (int s = 1; s <= 5; ++s) {
            SideObservation obs;
            obs.side = {index, s};
            std::vector<std::pair<EdgeSlot, std::vector<int>>> seen;
            // Every collared tile of this class could be the one we are looking at.
            for (int id : members)
                for (const auto& n : atlas.neighbors({id, s})) {
                    std::vector<int> labels;
                    for (int child : children_along(p, n, 1))
                        labels.push_back(class_of.at(child));
                    obs.neighbors.push_back(n);
                    obs.labels.insert(labels);
                    seen.emplace_back(n, labels);
                }
            collect_counterexample(r, obs, seen);
            class_ok = class_ok && obs.singleton();
            r.sides.push_back(std::move(obs));
        }
        r.per_tile[index] = class_ok;
    }
    return r;
}

}  // namespace tilespace
