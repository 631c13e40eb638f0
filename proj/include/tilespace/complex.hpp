#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tilespace/dataset.hpp"
#include "tilespace/matrix.hpp"
#include "tilespace/placement.hpp"

namespace tilespace {

/**
 * A finite CW complex given by cell counts and cellular boundary matrices.
 * boundary[d-1] is the map C_d -> C_{d-1}: rows are (d-1)-cells, columns
 * d-cells.
 */
struct CWComplex {
    std::vector<std::size_t> cells;
    std::vector<IntegerMatrix> boundary;
    std::vector<std::vector<std::string>> labels;         // optional, per dimension
    std::vector<std::pair<std::size_t, std::size_t>> edge_ends;  // optional (tail, head), 0-based
    std::vector<std::vector<std::size_t>> face_vertices;          // optional, 0-based

    int dimension() const { return static_cast<int>(cells.size()) - 1; }
    std::size_t count(int d) const;
    long euler_characteristic() const;
};

/** Cellular self-map. maps[d] is cells[d] x cells[d]; row = source cell. */
struct ChainMaps {
    std::vector<IntegerMatrix> maps;
};

ChainMaps identity_chain_maps(const CWComplex& c);
ChainMaps compose(const ChainMaps& first, const ChainMaps& second);

/**
 * Gamma from the tables. Each edge points from the vertex of its canonical
 * side A to that of side B; faces run through slots 1..5 with sign +1 when the
 * slot reads the edge in its canonical direction. Throws DerivationError if
 * the boundary maps do not compose to zero.
 */
CWComplex build_complex(const PentagonDataset& d);

/**
 * The substitution's action: faces by child counts, edges by the two signed
 * halves of each subdivided edge, vertices by the child at each corner.
 * Throws DerivationError naming the cell when a cell's image depends on where
 * it is read or the maps fail to commute with the boundaries.
 */
ChainMaps chain_maps(const PentagonDataset& d, const Placement& p, const CWComplex& c);

/** Chain maps of the n-fold substitution, read from n-level subdivision. */
ChainMaps chain_maps_power(const PentagonDataset& d, const Placement& p, const CWComplex& c, int levels);

/** Problems with d∘d = 0; empty when fine. */
std::vector<std::string> boundary_problems(const CWComplex& c);

/** boundary_d · S_d^T = S_{d-1}^T · boundary_d for all d; first failure described. */
std::optional<std::string> commutation_failure(const CWComplex& c, const ChainMaps& m);

/** Connected components of the 1-skeleton. */
std::size_t connectivity(const CWComplex& c);

/** Largest |entry| of each boundary map (how often a cell meets a boundary cell). */
std::vector<Integer> boundary_multiplicities(const CWComplex& c);

/**
 * Rational certificate that a nonnegative matrix with constant row sum r has
 * Perron eigenvalue r: constant row sums plus rank(A - rI) < n.
 */
struct PerronCertificate {
    bool constant_row_sums = false;
    Integer row_sum;
    bool singular = false;
    bool holds() const { return constant_row_sums && singular; }
};
PerronCertificate perron_certificate(const IntegerMatrix& a);

struct DotOptions {
    bool faces = false;
};

/** Deterministic DOT of the 1-skeleton, optionally with a node per face. */
std::string export_dot(const CWComplex& c, const DotOptions& options = {});

}  // namespace tilespace
