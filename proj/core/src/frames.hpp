#pragma once

#include <optional>

#include "cubecx/complex.hpp"

namespace cubecx::detail {

// Frame of the k-cube at `base` in which axis i leaves each corner through
// step(corner, i, up); `up` is false when the corner sits at 1 on axis i.
// nullopt when a step is missing or the corners do not close up.
template <class Step>
std::optional<CubeFrame> walk_frame(const CubeComplex& c, VertexId base, int k, Step step) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<VertexId> corners(n, kNone);
  std::vector<DartId> away(n * static_cast<std::size_t>(k), kNone);
  corners[0] = base;
  for (std::size_t s = 1; s < n; ++s) {
    int top = 0;
    while ((s >> (top + 1)) != 0) ++top;
    auto prev = s ^ (std::size_t{1} << top);
    DartId d = step(corners[prev], top, true);
    if (d == kNone) return std::nullopt;
    corners[s] = c.terminus(d);
  }
  for (std::size_t s = 0; s < n; ++s)
    for (int i = 0; i < k; ++i) {
      bool up = !((s >> i) & 1u);
      DartId d = step(corners[s], i, up);
      if (d == kNone || c.origin(d) != corners[s] || c.terminus(d) != corners[s ^ (std::size_t{1} << i)])
        return std::nullopt;
      away[s * k + i] = d;
    }
  return CubeFrame(k, std::move(corners), std::move(away));
}

}  // namespace cubecx::detail
