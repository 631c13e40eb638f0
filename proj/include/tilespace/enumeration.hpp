#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "tilespace/core.hpp"
#include "tilespace/dataset.hpp"

namespace tilespace {

/** Sentinel marking the y5 entry in a pattern row template. */
inline constexpr int kY5 = -1;

/**
 * One row of the exterior-pattern table for pattern (2), already rotated to
 * interior (1,2,3,4,5). Exactly one template entry is kY5.
 */
struct PatternRow {
    int id = 0;
    std::array<std::array<int, 3>, 5> groups{};
    Decoration lo;
    Decoration hi;
    bool allow_zero = true;

    /** (group, position) of the y5 entry. */
    std::pair<std::size_t, std::size_t> y5_position() const;
    friend bool operator==(const PatternRow&, const PatternRow&) = default;
};

/** Sorted 3-set of decorations that may not meet at a degree-3 vertex. */
using ForbiddenDecorations = std::array<int, 3>;

struct Candidate {
    CollaredTile tile;
    int row = 0;
    Decoration y5;
};

std::vector<PatternRow> parse_pattern_rows(std::string_view csv);
const std::vector<PatternRow>& embedded_pattern_rows();

/**
 * Regenerates the pattern-(2) table from its formula over x = 1..5 and
 * a, e in {0, 1}. Row ids are 0; order follows the formula loop.
 */
std::vector<PatternRow> pattern_two_rows_from_formula();

/** Pattern (1) for every x, normalized; all five agree. */
CollaredTile pattern_one_tile();

/**
 * The degree-3 corner set that y5 = 0 would create, when that set is not
 * a collared vertex in the given list; none when y5 = 0 is harmless.
 */
std::optional<ForbiddenDecorations> exclusion_reason(const PatternRow& row,
                                                     const std::vector<CollaredVertex>& vertices);
std::optional<ForbiddenDecorations> exclusion_reason(const PatternRow& row);

/** One candidate per admissible y5 value; y5 = 0 is dropped if excluded and apply_exclusion is set. */
std::vector<Candidate> expand_pattern_row(const PatternRow& row, bool apply_exclusion = true);

struct TileDiff {
    std::vector<CollaredTile> missing;  // listed but not derived
    std::vector<CollaredTile> extra;    // derived but not listed
    bool empty() const { return missing.empty() && extra.empty(); }
};

class EnumerationMismatch : public Error {
public:
    explicit EnumerationMismatch(TileDiff diff);
    const TileDiff& diff() const { return diff_; }

private:
    TileDiff diff_;
};

struct EnumerationResult {
    std::vector<Candidate> pattern_two;  // all kept candidates, row order
    CollaredTile pattern_one;
    std::vector<CollaredTile> tiles;     // deduplicated, sorted; ids from the table when matched
};

/** Expands every embedded row plus pattern (1), deduplicates, sorts. */
EnumerationResult enumerate_collared_tiles();

TileDiff compare_tiles(const std::vector<CollaredTile>& derived, const std::vector<CollaredTile>& listed);

/** enumerate_collared_tiles() checked against the table; throws EnumerationMismatch. */
EnumerationResult enumerate_and_match(const PentagonDataset& d);

}  // namespace tilespace
