#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cubecx/types.hpp"

namespace cubecx {

// Element of the hyperoctahedral group acting on corners of [0,1]^k.
// New axis j is old axis perm[j]; new corner S sits at old corner
// flip ^ (bits of S moved along perm).
struct CubeSymmetry {
  std::vector<int> perm;
  std::size_t flip = 0;

  std::size_t apply(std::size_t corner) const;
  bool is_identity() const;
};

// A parametrisation of a k-cube: vertex at each corner of {0,1}^k and, for
// each corner and axis, the dart leaving that corner along the axis.
// Darts come in pairs (d, d ^ 1), so reverses are implicit.
class CubeFrame {
 public:
  CubeFrame() = default;
  CubeFrame(int dim, std::vector<VertexId> corners, std::vector<DartId> away);

  static CubeFrame vertex(VertexId v);
  static CubeFrame edge(DartId forward, VertexId origin, VertexId terminus);
  // Square from a closed loop (d1,d2,d3,d4); corner 00 = origin(d1).
  static CubeFrame square(const std::array<DartId, 4>& loop, std::span<const VertexId> origin_of);

  int dim() const { return dim_; }
  std::size_t num_corners() const { return std::size_t{1} << dim_; }
  VertexId corner(std::size_t c) const { return corners_[c]; }
  DartId away(std::size_t c, int axis) const { return away_[c * dim_ + axis]; }
  const std::vector<VertexId>& corners() const { return corners_; }
  const std::vector<DartId>& away_darts() const { return away_; }

  // Sorted darts leaving corner c.
  std::vector<DartId> corner_darts(std::size_t c) const;
  // Dart from corner 0 along each axis.
  std::vector<DartId> base_darts() const;
  // Edge id (dart >> 1) of each axis.
  EdgeId axis_edge(int axis) const { return away_[axis] >> 1; }

  CubeFrame face(int axis, int side) const;
  // Keep `free_axes` (in that order); other axes are pinned to their bit in `pinned`.
  CubeFrame subframe(std::span<const int> free_axes, std::size_t pinned) const;
  CubeFrame transformed(const CubeSymmetry& s) const;
  // Same cube seen from corner c with axes listed in `axis_order`.
  CubeFrame reoriented(std::size_t c, std::span<const int> axis_order) const;

  template <class VMap, class DMap>
  CubeFrame mapped(VMap vmap, DMap dmap) const {
    CubeFrame f = *this;
    for (auto& v : f.corners_) v = vmap(v);
    for (auto& d : f.away_) d = dmap(d);
    return f;
  }

  // Canonical key: identifies the cell independent of parametrisation.
  std::vector<std::uint32_t> key() const;
  // Inverse of square(): (d1,d2,d3,d4).
  std::array<DartId, 4> square_loop() const;

  bool operator==(const CubeFrame&) const = default;

 private:
  int dim_ = 0;
  std::vector<VertexId> corners_;
  std::vector<DartId> away_;
};

// sigma with `to` = `from` ∘ sigma, when both parametrise the same cell.
std::optional<CubeSymmetry> find_symmetry(const CubeFrame& from, const CubeFrame& to);

inline DartId reverse_dart(DartId d) { return d ^ 1u; }
inline EdgeId edge_of_dart(DartId d) { return d >> 1; }

}  // namespace cubecx
