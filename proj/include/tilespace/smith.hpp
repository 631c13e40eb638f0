#pragma once

#include <vector>

#include "tilespace/matrix.hpp"

namespace tilespace {

/**
 * U * M * V = D with U, V unimodular and D diagonal, nonnegative, each
 * diagonal entry dividing the next. The inverses come from the same row and
 * column operations, so no inversion is needed.
 */
struct SNFResult {
    IntegerMatrix U, D, V;
    IntegerMatrix U_inv, V_inv;
    std::size_t rank = 0;

    /** The nonzero diagonal entries d_1 | d_2 | ... | d_rank. */
    std::vector<Integer> invariant_factors() const;
};

SNFResult smith_normal_form(const IntegerMatrix& m);

}  // namespace tilespace
