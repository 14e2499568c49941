#include "cubecx/cube_frame.hpp"

#include <algorithm>

namespace cubecx {

std::size_t CubeSymmetry::apply(std::size_t corner) const {
  std::size_t t = flip;
  for (std::size_t j = 0; j < perm.size(); ++j)
    if ((corner >> j) & 1u) t ^= std::size_t{1} << perm[j];
  return t;
}

bool CubeSymmetry::is_identity() const {
  if (flip) return false;
  for (std::size_t j = 0; j < perm.size(); ++j)
    if (perm[j] != static_cast<int>(j)) return false;
  return true;
}

CubeFrame::CubeFrame(int dim, std::vector<VertexId> corners, std::vector<DartId> away)
    : dim_(dim), corners_(std::move(corners)), away_(std::move(away)) {
  if (corners_.size() != num_corners() || away_.size() != num_corners() * static_cast<std::size_t>(dim_))
    throw InternalConsistencyError("cube frame with wrong array sizes");
}

CubeFrame CubeFrame::vertex(VertexId v) { return CubeFrame(0, {v}, {}); }

CubeFrame CubeFrame::edge(DartId forward, VertexId origin, VertexId terminus) {
  return CubeFrame(1, {origin, terminus}, {forward, reverse_dart(forward)});
}

CubeFrame CubeFrame::square(const std::array<DartId, 4>& d, std::span<const VertexId> origin_of) {
  std::vector<VertexId> corners{origin_of[d[0]], origin_of[d[1]], origin_of[d[3]], origin_of[d[2]]};
  std::vector<DartId> away{d[0],
                           reverse_dart(d[3]),  // corner 00
                           reverse_dart(d[0]),
                           d[1],  // corner 10
                           reverse_dart(d[2]),
                           d[3],  // corner 01
                           d[2],
                           reverse_dart(d[1])};  // corner 11
  return CubeFrame(2, std::move(corners), std::move(away));
}

std::vector<DartId> CubeFrame::corner_darts(std::size_t c) const {
  std::vector<DartId> out(away_.begin() + static_cast<long>(c * dim_),
                          away_.begin() + static_cast<long>((c + 1) * dim_));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DartId> CubeFrame::base_darts() const {
  return std::vector<DartId>(away_.begin(), away_.begin() + dim_);
}

CubeFrame CubeFrame::face(int axis, int side) const {
  std::vector<int> free;
  for (int i = 0; i < dim_; ++i)
    if (i != axis) free.push_back(i);
  return subframe(free, side ? (std::size_t{1} << axis) : 0);
}

CubeFrame CubeFrame::subframe(std::span<const int> free_axes, std::size_t pinned) const {
  const int r = static_cast<int>(free_axes.size());
  std::size_t base = pinned;
  for (int a : free_axes) base &= ~(std::size_t{1} << a);
  std::vector<VertexId> corners(std::size_t{1} << r);
  std::vector<DartId> aw(corners.size() * static_cast<std::size_t>(r));
  for (std::size_t s = 0; s < corners.size(); ++s) {
    std::size_t t = base;
    for (int j = 0; j < r; ++j)
      if ((s >> j) & 1u) t |= std::size_t{1} << free_axes[j];
    corners[s] = corners_[t];
    for (int j = 0; j < r; ++j) aw[s * r + j] = away(t, free_axes[j]);
  }
  return CubeFrame(r, std::move(corners), std::move(aw));
}

CubeFrame CubeFrame::transformed(const CubeSymmetry& sym) const {
  std::vector<VertexId> corners(num_corners());
  std::vector<DartId> aw(away_.size());
  for (std::size_t s = 0; s < corners.size(); ++s) {
    std::size_t t = sym.apply(s);
    corners[s] = corners_[t];
    for (int j = 0; j < dim_; ++j) aw[s * dim_ + j] = away(t, sym.perm[j]);
  }
  return CubeFrame(dim_, std::move(corners), std::move(aw));
}

CubeFrame CubeFrame::reoriented(std::size_t c, std::span<const int> axis_order) const {
  CubeSymmetry s{std::vector<int>(axis_order.begin(), axis_order.end()), c};
  return transformed(s);
}

std::vector<std::uint32_t> CubeFrame::key() const {
  if (dim_ == 0) return {corners_[0]};
  if (dim_ == 1) return {edge_of_dart(away_[0])};
  std::vector<std::vector<DartId>> sets;
  sets.reserve(num_corners());
  for (std::size_t c = 0; c < num_corners(); ++c) sets.push_back(corner_darts(c));
  std::sort(sets.begin(), sets.end());
  std::vector<std::uint32_t> out;
  out.reserve(away_.size());
  for (auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::array<DartId, 4> CubeFrame::square_loop() const {
  return {away(0, 0), away(1, 1), away(3, 0), away(2, 1)};
}

std::optional<CubeSymmetry> find_symmetry(const CubeFrame& from, const CubeFrame& to) {
  if (from.dim() != to.dim()) return std::nullopt;
  const int k = from.dim();
  auto target = to.corner_darts(0);
  for (std::size_t c = 0; c < from.num_corners(); ++c) {
    if (from.corner(c) != to.corner(0) || from.corner_darts(c) != target) continue;
    CubeSymmetry s{std::vector<int>(k, -1), c};
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      for (int a = 0; a < k; ++a)
        if (from.away(c, a) == to.away(0, j) &&
            std::find(s.perm.begin(), s.perm.end(), a) == s.perm.end()) {
          s.perm[j] = a;
          break;
        }
      if (s.perm[j] < 0) ok = false;
    }
    if (ok && from.transformed(s) == to) return s;
  }
  return std::nullopt;
}

}  // namespace cubecx
