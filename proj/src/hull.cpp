#include "tilespace/hull.hpp"

#include <algorithm>

#include "tilespace/placement.hpp"

namespace tilespace {

bool HullReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

CheckResult check(std::string name, std::string provenance, bool ok, std::string detail) {
    return {std::move(name), std::move(provenance), ok, std::move(detail)};
}

}  // namespace

HullReport limit_cohomology(const CWComplex& c, const ChainMaps& m, const ChainMaps* squared) {
    HullReport r;
    r.cells = c.cells;

    auto dd = boundary_problems(c);
    r.checks.push_back(check("boundary squares to zero", "cellular chain complex", dd.empty(),
                             dd.empty() ? "ok" : dd.front()));
    auto comm = commutation_failure(c, m);
    r.checks.push_back(check("chain map commutes", "substitution is cellular", !comm, comm ? *comm : "ok"));

    auto groups = cohomology_groups(c);
    auto induced = induced_endomorphisms(c, groups, m);

    long alternating = 0;
    for (const auto& h : groups)
        alternating += (h.degree % 2 ? -1 : 1) * static_cast<long>(h.group.rank);
    r.checks.push_back(check("Euler characteristic", "alternating cell count", alternating == c.euler_characteristic(),
                             "sum of (-1)^d rank H^d = " + std::to_string(alternating) + ", chi = " +
                                 std::to_string(c.euler_characteristic())));
    if (!groups.empty()) {
        std::size_t comps = connectivity(c);
        r.checks.push_back(check("H0 rank equals components", "connected 1-skeleton", groups[0].group.rank == comps,
                                 "rank H0 = " + std::to_string(groups[0].group.rank) + ", components = " +
                                     std::to_string(comps)));
    }

    if (squared) {
        auto comm2 = commutation_failure(c, *squared);
        auto induced2 = induced_endomorphisms(c, groups, *squared);
        bool agree = !comm2;
        for (std::size_t d = 0; agree && d < induced.size(); ++d) {
            IntegerMatrix twice = induced[d].matrix * induced[d].matrix;
            std::vector<Integer> orders = groups[d].orders;
            for (std::size_t i = 0; i < twice.rows(); ++i)
                if (orders[i] != 0)
                    for (std::size_t j = 0; j < twice.cols(); ++j) {
                        Integer x = twice(i, j) % orders[i];
                        twice(i, j) = x < 0 ? Integer(x + orders[i]) : x;
                    }
            agree = twice == induced2[d].matrix;
        }
        r.checks.push_back(check("squared substitution", "induced map of the twice-applied substitution", agree,
                                 agree ? "square of induced maps equals induced map of the two-level chain maps"
                                       : "mismatch"));
    }

    for (std::size_t d = 0; d < groups.size(); ++d) {
        DegreeReport dr;
        dr.degree = groups[d].degree;
        dr.complex_group = groups[d].group;
        dr.induced = induced[d];
        dr.limit = direct_limit(groups[d], induced[d]);
        r.degrees.push_back(std::move(dr));
    }
    return r;
}

HullReport hull_cohomology(const PentagonDataset& d) {
    Placement p = derive_placement(d);
    CWComplex c = build_complex(d);
    ChainMaps m = chain_maps(d, p, c);
    ChainMaps m2 = chain_maps_power(d, p, c, 2);

    HullReport r = limit_cohomology(c, m, &m2);
    r.checks.insert(r.checks.begin(),
                    check("placement", "children fit the patch", true,
                          p.ambiguities.empty() ? "unique for all rules" : p.ambiguities.front()));
    bool composed = compose(m, m).maps == m2.maps;
    r.checks.push_back(check("two-level chain maps", "rule composition", composed,
                             composed ? "S(2) = S * S in every degree" : "S(2) differs from S * S"));
    r.checks.push_back(check("connected hull", "limit of H0", !r.degrees.empty() && r.degrees[0].limit.rational_dim == 1,
                             "H0 rational dimension " +
                                 std::to_string(r.degrees.empty() ? 0 : r.degrees[0].limit.rational_dim)));
    return r;
}

}  // namespace tilespace
