#pragma once

#include <optional>

#include "cubecx/complex.hpp"
#include "cubecx/cubical_map.hpp"

namespace cubecx {

// Exact backtracking over darts, pruned by refined vertex colours (degree,
// loop count, corner counts, and germ labels when respected).
std::optional<CubicalMap> is_isomorphic(const CubeComplex& a, const CubeComplex& b, bool respect_labels = false);

}  // namespace cubecx
