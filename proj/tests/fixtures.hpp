#pragma once

#include <string>

#include "toric/chen_ruan.hpp"
#include "toric/io.hpp"

namespace toric::testing {

inline std::string data_path(const std::string& name) {
    return std::string(TORIC_DATA_DIR) + "/" + name;
}

inline LabeledPolytope load(const std::string& name) {
    return io::read_polytope_file(data_path(name));
}

inline SectorElement sector(std::initializer_list<Rational> coords) {
    return SectorElement{RationalVector(coords)};
}

inline Polynomial poly(std::size_t m, const std::string& text) {
    return io::parse_polynomial(text, m);
}

} // namespace toric::testing
