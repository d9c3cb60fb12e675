#pragma once

#include <string>

#include "birel/model.hpp"
#include "birel/model_io.hpp"

#ifndef BIRELLAB_DATA_DIR
#error "BIRELLAB_DATA_DIR must be defined"
#endif

namespace birel::testing {

inline std::string data_path(const std::string& rel) { return std::string(BIRELLAB_DATA_DIR) + "/" + rel; }

inline BirelationalModel fixture(const std::string& name) { return load_model(data_path("models/" + name)); }

}  // namespace birel::testing
