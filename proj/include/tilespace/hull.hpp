#pragma once

#include <string>
#include <vector>

#include "tilespace/cohomology.hpp"
#include "tilespace/complex.hpp"
#include "tilespace/dataset.hpp"

namespace tilespace {

struct DegreeReport {
    int degree = 0;
    AbelianGroup complex_group;  // H^d of the finite complex
    InducedMap induced;
    DirectLimitResult limit;
};

struct HullReport {
    std::vector<std::size_t> cells;
    std::vector<CheckResult> checks;
    std::vector<DegreeReport> degrees;

    bool passed() const;
};

/**
 * Cohomology of a complex and of the direct limit under the given chain
 * maps. `squared`, when given, is the chain map of the twice-applied
 * substitution and is cross-checked against the square of the induced maps.
 */
HullReport limit_cohomology(const CWComplex& c, const ChainMaps& m, const ChainMaps* squared = nullptr);

/**
 * The whole pipeline for the pentagonal tables: placement, complex, chain
 * maps, cohomology, direct limits. Throws on the first failed derivation;
 * the checks record every consistency test that ran.
 */
HullReport hull_cohomology(const PentagonDataset& d);

}  // namespace tilespace
