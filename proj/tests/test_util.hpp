#pragma once

#include <string>

#include "fusionkit/ring.hpp"

namespace fktest {

inline std::string data_path(const std::string& file) {
    return std::string(FUSIONKIT_DATA_DIR) + "/" + file;
}

inline std::string fixture_path(const std::string& file) {
    return std::string(FUSIONKIT_FIXTURE_DIR) + "/" + file;
}

inline fusionkit::CenterBundle load_data(const std::string& file) {
    return fusionkit::load_bundle(data_path(file));
}

}  // namespace fktest
