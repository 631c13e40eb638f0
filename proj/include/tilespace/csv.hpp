#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tilespace {

struct CsvRow {
    std::size_t line = 0;
    std::vector<int> values;
    std::vector<std::size_t> columns;  // 1-based start column of each value
};

/**
 * Reads a header line plus rows of comma-separated integers. Blank lines
 * are skipped; every row must have exactly `width` fields.
 * @param source name used in ParseError messages
 */
std::vector<CsvRow> parse_int_csv(std::string_view text, const std::string& source, std::size_t width);

}  // namespace tilespace
