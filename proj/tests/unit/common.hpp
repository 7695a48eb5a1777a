#pragma once

#include <string>

#include "tgs/element_set.hpp"
#include "tgs/json_io.hpp"

inline tgs::GammaStructure fixture(const std::string& name) {
  return tgs::load_structure(std::string(TGS_FIXTURE_DIR) + "/" + name + ".json");
}

inline tgs::ElementSet S(std::initializer_list<int> e) { return tgs::ElementSet::of(e); }
