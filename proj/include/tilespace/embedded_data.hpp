#pragma once

#include <string_view>

namespace tilespace::embedded {

// Reference tables compiled in from data/*.csv.
extern const std::string_view tiles_csv;
extern const std::string_view edges_csv;
extern const std::string_view vertices_csv;
extern const std::string_view rules_csv;
extern const std::string_view patternrows_csv;

}  // namespace tilespace::embedded
