#include "tilespace/csv.hpp"

#include <charconv>

#include "tilespace/error.hpp"

namespace tilespace {

static bool blank(std::string_view s) { return s.find_first_not_of(" \t\r") == std::string_view::npos; }

std::vector<CsvRow> parse_int_csv(std::string_view text, const std::string& source, std::size_t width) {
    std::vector<CsvRow> rows;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (blank(line))
            continue;
        if (!header_seen) {
            header_seen = true;
            if (line.find_first_of("0123456789") == line.find_first_not_of(" \t"))
                throw ParseError(source, line_no, 1, "header line required");
            continue;
        }
        CsvRow row;
        row.line = line_no;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            std::string_view field = line.substr(start, comma == std::string_view::npos ? line.size() - start
                                                                                          : comma - start);
            std::size_t lead = field.find_first_not_of(" \t");
            std::size_t col = start + (lead == std::string_view::npos ? 0 : lead) + 1;
            std::size_t last = field.find_last_not_of(" \t\r");
            if (lead == std::string_view::npos)
                throw ParseError(source, line_no, col, "empty field");
            field = field.substr(lead, last - lead + 1);
            int v = 0;
            auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
            if (ec != std::errc() || p != field.data() + field.size())
                throw ParseError(source, line_no, col, "expected integer, got '" + std::string(field) + "'");
            row.values.push_back(v);
            row.columns.push_back(col);
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (row.values.size() != width)
            throw ParseError(source, line_no, 1,
                             "expected " + std::to_string(width) + " fields, got " + std::to_string(row.values.size()));
        rows.push_back(std::move(row));
    }
    if (!header_seen)
        throw ParseError(source, 1, 1, "header line required");
    return rows;
}

}  // namespace tilespace
