#pragma once

#include <string_view>
#include <vector>

#include "ellfm/intersection_ring.hpp"

namespace ellfm {

/// Built-in base surfaces:
///   k3_quartic   rho = 1, gram [4], K_S = 0
///   enriques     rho = 1, gram [2], K_S numerically trivial
///   general_demo rho = 2, gram diag(1, -1), K_S = -3H + E (ring demos only)
SurfaceModel preset(std::string_view name);

/// Ample class H_S used by the preset: the first lattice generator.
RationalVec preset_ample(std::string_view name);

std::vector<std::string_view> preset_names();

} // namespace ellfm
