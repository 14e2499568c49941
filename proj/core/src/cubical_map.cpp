#include "cubecx/cubical_map.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace cubecx {

CubicalMap make_cubical_map(const CubeComplex& source, const CubeComplex& target,
                            std::vector<VertexId> vertex_map, std::vector<DartId> dart_map) {
  if (vertex_map.size() != source.num_vertices() || dart_map.size() != source.num_darts())
    throw PreconditionError("cubical map has the wrong number of entries");
  for (auto v : vertex_map)
    if (v >= target.num_vertices()) throw PreconditionError("vertex image out of range");
  for (DartId d = 0; d < source.num_darts(); ++d) {
    auto e = dart_map[d];
    if (e == kNone) {
      if (dart_map[d ^ 1u] != kNone || vertex_map[source.origin(d)] != vertex_map[source.terminus(d)])
        throw PreconditionError("collapsed dart '" + source.dart_name(d) + "' is not crushed consistently");
      continue;
    }
    if (e >= target.num_darts()) throw PreconditionError("dart image out of range");
    if (dart_map[d ^ 1u] != (e ^ 1u))
      throw PreconditionError("dart map does not commute with reverse at '" + source.dart_name(d) + "'");
    if (target.origin(e) != vertex_map[source.origin(d)])
      throw PreconditionError("dart map does not respect the origin of '" + source.dart_name(d) + "'");
  }
  CubicalMap m{std::move(vertex_map), std::move(dart_map), {}};
  m.cube_map.resize(std::max(2, source.dimension() + 1));
  for (int k = 2; k <= source.dimension(); ++k) {
    m.cube_map[k].assign(source.num_cells(k), kNone);
    for (CellId id = 0; id < source.num_cells(k); ++id) {
      const auto& f = source.cube(k, id);
      bool crushed = false;
      for (int a = 0; a < k; ++a)
        if (m.dart_map[f.away(0, a)] == kNone) crushed = true;
      if (crushed) continue;
      auto img = f.mapped([&](VertexId v) { return m.vertex_map[v]; }, [&](DartId d) { return m.dart_map[d]; });
      auto t = target.find_cell(img);
      if (!t) throw PreconditionError(std::to_string(k) + "-cube " + std::to_string(id) + " has no image cell");
      m.cube_map[k][id] = *t;
    }
  }
  return m;
}

CubicalMap identity_map(const CubeComplex& c) {
  std::vector<VertexId> v(c.num_vertices());
  std::iota(v.begin(), v.end(), 0);
  std::vector<DartId> d(c.num_darts());
  std::iota(d.begin(), d.end(), 0);
  return make_cubical_map(c, c, std::move(v), std::move(d));
}

CubicalMap compose(const CubicalMap& g, const CubicalMap& f) {
  CubicalMap out;
  for (auto v : f.vertex_map) out.vertex_map.push_back(g.vertex_map[v]);
  for (auto d : f.dart_map) out.dart_map.push_back(d == kNone ? kNone : g.dart_map[d]);
  out.cube_map.resize(f.cube_map.size());
  for (std::size_t k = 2; k < f.cube_map.size(); ++k)
    for (auto id : f.cube_map[k])
      out.cube_map[k].push_back(id == kNone || k >= g.cube_map.size() ? kNone : g.cube_map[k][id]);
  return out;
}

bool is_injective(const CubicalMap& f) {
  auto check = [](const std::vector<std::uint32_t>& xs) {
    std::set<std::uint32_t> seen;
    for (auto x : xs)
      if (x == kNone || !seen.insert(x).second) return false;
    return true;
  };
  if (!check(f.vertex_map) || !check(f.dart_map)) return false;
  for (std::size_t k = 2; k < f.cube_map.size(); ++k)
    if (!check(f.cube_map[k])) return false;
  return true;
}

CubicalAutomorphism::CubicalAutomorphism(const CubeComplex& c, std::vector<VertexId> vertex_map,
                                         std::vector<DartId> dart_map)
    : map_(make_cubical_map(c, c, std::move(vertex_map), std::move(dart_map))) {
  if (!is_injective(map_)) throw PreconditionError("automorphism is not a bijection");
}

CubicalAutomorphism CubicalAutomorphism::identity(const CubeComplex& c) {
  CubicalAutomorphism a;
  a.map_ = identity_map(c);
  return a;
}

CellId CubicalAutomorphism::cube(int k, CellId id) const {
  if (k == 0) return map_.vertex_map[id];
  if (k == 1) return map_.dart_map[2 * id] >> 1;
  return map_.cube_map[k][id];
}

CubeFrame CubicalAutomorphism::apply(const CubeFrame& f) const {
  return f.mapped([&](VertexId v) { return map_.vertex_map[v]; }, [&](DartId d) { return map_.dart_map[d]; });
}

CubicalAutomorphism CubicalAutomorphism::then(const CubicalAutomorphism& next) const {
  CubicalAutomorphism a;
  a.map_ = compose(next.map_, map_);
  return a;
}

CubicalAutomorphism CubicalAutomorphism::inverse() const {
  CubicalAutomorphism a = *this;
  for (std::size_t i = 0; i < map_.vertex_map.size(); ++i) a.map_.vertex_map[map_.vertex_map[i]] = static_cast<VertexId>(i);
  for (std::size_t i = 0; i < map_.dart_map.size(); ++i) a.map_.dart_map[map_.dart_map[i]] = static_cast<DartId>(i);
  for (std::size_t k = 2; k < map_.cube_map.size(); ++k)
    for (std::size_t i = 0; i < map_.cube_map[k].size(); ++i)
      a.map_.cube_map[k][map_.cube_map[k][i]] = static_cast<CellId>(i);
  return a;
}

CubicalAutomorphism CubicalAutomorphism::power(long n) const {
  CubicalAutomorphism base = n < 0 ? inverse() : *this;
  n = n < 0 ? -n : n;
  CubicalAutomorphism result = base;
  // Identity with the right shape.
  for (std::size_t i = 0; i < result.map_.vertex_map.size(); ++i) result.map_.vertex_map[i] = static_cast<VertexId>(i);
  for (std::size_t i = 0; i < result.map_.dart_map.size(); ++i) result.map_.dart_map[i] = static_cast<DartId>(i);
  for (auto& cm : result.map_.cube_map)
    for (std::size_t i = 0; i < cm.size(); ++i) cm[i] = static_cast<CellId>(i);
  while (n > 0) {
    if (n & 1) result = result.then(base);
    base = base.then(base);
    n >>= 1;
  }
  return result;
}

bool CubicalAutomorphism::is_identity() const {
  for (std::size_t i = 0; i < map_.vertex_map.size(); ++i)
    if (map_.vertex_map[i] != i) return false;
  for (std::size_t i = 0; i < map_.dart_map.size(); ++i)
    if (map_.dart_map[i] != i) return false;
  return true;
}

std::size_t CubicalAutomorphism::order(std::size_t cap) const {
  CubicalAutomorphism p = *this;
  for (std::size_t n = 1; n <= cap; ++n) {
    if (p.is_identity()) return n;
    p = p.then(*this);
  }
  throw CapExceeded("automorphism order", cap);
}

std::vector<CubicalAutomorphism> group_closure(const CubeComplex& c,
                                               const std::vector<CubicalAutomorphism>& generators,
                                               std::size_t cap) {
  std::vector<CubicalAutomorphism> elements{CubicalAutomorphism::identity(c)};
  std::set<std::pair<std::vector<VertexId>, std::vector<DartId>>> seen;
  seen.emplace(elements[0].map().vertex_map, elements[0].map().dart_map);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      auto h = elements[i].then(g);
      if (!seen.emplace(h.map().vertex_map, h.map().dart_map).second) continue;
      if (elements.size() >= cap) throw CapExceeded("group closure", cap);
      elements.push_back(std::move(h));
      queue.push_back(elements.size() - 1);
    }
  }
  return elements;
}

}  // namespace cubecx
