#pragma once

#include <string>
#include <vector>

#include "tilespace/complex.hpp"
#include "tilespace/matrix.hpp"
#include "tilespace/smith.hpp"

namespace tilespace {

/** Z^rank plus Z/t_1 + ... with t_1 | t_2 | ..., each t_i >= 2. */
struct AbelianGroup {
    std::size_t rank = 0;
    std::vector<Integer> torsion;

    bool trivial() const { return rank == 0 && torsion.empty(); }
    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/** e.g. "Z^5 + (Z/2)^5", "Z", "0". */
std::string to_string(const AbelianGroup& g);

/**
 * H^d of a cochain complex on an SNF-adapted basis. Generators are cocycles
 * (columns of `generators`); torsion generators come first. `coordinates`
 * sends a cocycle to its generator coefficients (reduce torsion rows mod
 * their order).
 */
struct CohomologyGroup {
    int degree = 0;
    AbelianGroup group;
    IntegerMatrix generators;   // cells x generators
    IntegerMatrix coordinates;  // generators x cells
    std::vector<Integer> orders;  // per generator; 0 for free

    std::size_t torsion_count() const { return group.torsion.size(); }
};

/** Cellular cohomology, cochain differentials being the transposed boundaries. */
std::vector<CohomologyGroup> cohomology_groups(const CWComplex& c);
std::vector<AbelianGroup> cohomology(const CWComplex& c);

/**
 * The map a chain map induces on H^d. A cochain phi goes to S_d * phi
 * (rows of S_d are sources). `matrix` acts on generator coordinates with
 * torsion rows reduced; `free_part` is the block on the free generators,
 * i.e. the action on H^d modulo torsion.
 */
struct InducedMap {
    int degree = 0;
    IntegerMatrix matrix;
    IntegerMatrix free_part;
    IntegerMatrix torsion_part;
};

/** Throws DerivationError when the chain maps do not commute with the boundaries. */
std::vector<InducedMap> induced_endomorphisms(const CWComplex& c, const ChainMaps& m);
std::vector<InducedMap> induced_endomorphisms(const CWComplex& c, const std::vector<CohomologyGroup>& groups,
                                              const ChainMaps& m);

/**
 * Direct limit of Z^r under M, plus the eventual image of the torsion
 * part when given. Past the stabilization index n, M^n maps Z^r onto a
 * saturated lattice E of rank rational_dim and M restricts to E with
 * determinant `eventual_determinant`; the limit is Z^rational_dim exactly
 * when that determinant is a unit, and otherwise acquires denominators at
 * `localization_primes`.
 */
struct DirectLimitResult {
    std::size_t rational_dim = 0;
    unsigned stabilization_index = 0;
    std::vector<std::size_t> rank_sequence;     // rank(M^1), ..., rank(M^{n+1})
    std::vector<Integer> stabilized_invariants;  // SNF diagonal of M^n
    IntegerMatrix restricted;                    // M on E
    Integer eventual_determinant = 1;
    std::vector<Integer> localization_primes;
    Integer unfactored = 1;  // cofactor left after trial division, 1 if none
    bool unimodular = true;
    AbelianGroup torsion_limit;
    std::string description;
};

DirectLimitResult direct_limit(const IntegerMatrix& m);
DirectLimitResult direct_limit(const CohomologyGroup& h, const InducedMap& f);

/** Eventual image of an endomorphism of Z/o_1 + ... + Z/o_k. */
AbelianGroup finite_eventual_image(const std::vector<Integer>& orders, const IntegerMatrix& map);

/** Subgroup of Z/o_1 + ... generated by the columns of `gens`. */
AbelianGroup generated_subgroup(const std::vector<Integer>& orders, const IntegerMatrix& gens);

}  // namespace tilespace
