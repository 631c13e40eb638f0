#include "tilespace/report.hpp"

namespace tilespace {

Json to_json(const Integer& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

Json to_json(const IntegerMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const CheckResult& c) {
    return {{"name", c.name}, {"provenance", c.provenance}, {"passed", c.passed}, {"detail", c.detail}};
}

Json to_json(const ValidationReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    return {{"counts",
             {{"tiles", r.tile_count}, {"edges", r.edge_count}, {"vertices", r.vertex_count}, {"rules", r.rule_count}}},
            {"checks", checks},
            {"passed", r.passed()}};
}

namespace {

Json tile_json(const CollaredTile& t) {
    return {{"id", t.id}, {"exterior", to_string(t)}};
}

}  // namespace

Json to_json(const EnumerationResult& r) {
    Json per_row = Json::object();
    for (const auto& c : r.pattern_two)
        per_row[std::to_string(c.row)] = per_row.value(std::to_string(c.row), 0) + 1;
    Json candidates = Json::array();
    for (const auto& c : r.pattern_two)
        candidates.push_back({{"row", c.row}, {"y5", c.y5.value()}, {"tile", tile_json(c.tile)}});
    Json tiles = Json::array();
    for (const auto& t : r.tiles)
        tiles.push_back(tile_json(t));
    return {{"pattern_two_candidates", r.pattern_two.size()},
            {"per_row", per_row},
            {"pattern_one", tile_json(r.pattern_one)},
            {"derived_tiles", r.tiles.size()},
            {"candidates", candidates},
            {"tiles", tiles}};
}

Json to_json(const IncidenceStats& s) {
    auto hist = [](const std::map<int, int>& h) {
        Json j = Json::object();
        for (auto [k, v] : h)
            j[std::to_string(k)] = v;
        return j;
    };
    Json vertices = Json::array();
    for (const auto& v : s.vertices)
        vertices.push_back({{"vertex", v.vertex},
                            {"degree", v.degree},
                            {"edges", v.edges},
                            {"distinct_edges", v.distinct_edges},
                            {"tiles", v.tiles}});
    return {{"total_slots", s.total_slots},
            {"edge_join_histogram", hist(s.edge_join_histogram)},
            {"distinct_vertex_histogram", hist(s.distinct_vertex_histogram)},
            {"vertices", vertices},
            {"edges_starting_with", s.edges_starting_with},
            {"sides_starting_with", s.sides_starting_with}};
}

Json to_json(const ForcingReport& r) {
    Json sides = Json::array();
    for (const auto& s : r.sides) {
        Json labels = Json::array();
        for (const auto& l : s.labels)
            labels.push_back(l);
        sides.push_back({{"tile", s.side.tile},
                         {"slot", s.side.slot},
                         {"neighbors", s.neighbors.size()},
                         {"labels", labels},
                         {"singleton", s.singleton()}});
    }
    Json cx = Json::array();
    for (const auto& c : r.counterexamples)
        cx.push_back({{"side", {c.side.tile, c.side.slot}},
                      {"neighbor_a", {c.first_neighbor.tile, c.first_neighbor.slot}},
                      {"labels_a", c.first_labels},
                      {"neighbor_b", {c.second_neighbor.tile, c.second_neighbor.slot}},
                      {"labels_b", c.second_labels}});
    return {{"scope", "edge-level"},
            {"level", r.level},
            {"uncollared", r.uncollared},
            {"passed", r.passed()},
            {"singleton_sides", r.singleton_count()},
            {"total_sides", r.sides.size()},
            {"counterexamples", cx},
            {"sides", sides}};
}

Json to_json(const AbelianGroup& g) {
    Json torsion = Json::array();
    for (const auto& t : g.torsion)
        torsion.push_back(to_json(t));
    return {{"rank", g.rank}, {"torsion", torsion}, {"text", to_string(g)}};
}

Json to_json(const DirectLimitResult& r) {
    Json inv = Json::array(), primes = Json::array();
    for (const auto& x : r.stabilized_invariants)
        inv.push_back(to_json(x));
    for (const auto& p : r.localization_primes)
        primes.push_back(to_json(p));
    return {{"rational_dim", r.rational_dim},
            {"stabilization_index", r.stabilization_index},
            {"rank_sequence", r.rank_sequence},
            {"stabilized_invariants", inv},
            {"restricted_map", to_json(r.restricted)},
            {"eventual_determinant", to_json(r.eventual_determinant)},
            {"unimodular", r.unimodular},
            {"localization_primes", primes},
            {"unfactored", to_json(r.unfactored)},
            {"torsion_limit", to_json(r.torsion_limit)},
            {"free_limit", r.description}};
}

Json to_json(const HullReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(to_json(c));
    Json degrees = Json::array();
    for (const auto& d : r.degrees)
        degrees.push_back({{"degree", d.degree},
                           {"complex_group", to_json(d.complex_group)},
                           {"induced", to_json(d.induced.matrix)},
                           {"induced_free", to_json(d.induced.free_part)},
                           {"limit", to_json(d.limit)}});
    return {{"cells", r.cells}, {"checks", checks}, {"passed", r.passed()}, {"degrees", degrees}};
}

Json to_json(const Thread& t) { return {{"base_face", t.base_face}, {"addresses", t.addresses}}; }

Json complex_json(const CWComplex& c, const ChainMaps& m) {
    Json j = {{"faces", c.count(2)}, {"edges", c.count(1)}, {"vertices", c.count(0)}};
    j["boundary2"] = c.boundary.size() > 1 ? to_json(c.boundary[1]) : Json::array();
    j["boundary1"] = !c.boundary.empty() ? to_json(c.boundary[0]) : Json::array();
    j["S2"] = m.maps.size() > 2 ? to_json(m.maps[2]) : Json::array();
    j["S1"] = m.maps.size() > 1 ? to_json(m.maps[1]) : Json::array();
    j["S0"] = !m.maps.empty() ? to_json(m.maps[0]) : Json::array();
    return j;
}

}  // namespace tilespace
