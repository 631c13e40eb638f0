#pragma once

#include <string>

#include "tilespace/dataset.hpp"

namespace fixtures {

inline const tilespace::PentagonDataset& dataset() {
    static const tilespace::PentagonDataset d = tilespace::load_dataset();
    return d;
}

inline std::string data_dir() { return TILESPACE_DATA_DIR; }

}  // namespace fixtures
