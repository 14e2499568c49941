#include "cubecx/hyperplanes.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "union_find.hpp"

namespace cubecx {

namespace {

using detail::ParityUnionFind;

}  // namespace

HyperplaneStructure::HyperplaneStructure(const CubeComplex& c) {
  const std::size_t m = c.num_edges();
  ParityUnionFind uf(m);
  std::vector<char> conflict_root(m, 0);
  std::vector<std::pair<EdgeId, EdgeId>> conflicts;
  for (const auto& f : c.cubes(2))
    for (int a = 0; a < 2; ++a) {
      DartId d0 = f.away(0, a);
      DartId d1 = f.away(std::size_t{1} << (1 - a), a);
      if (!uf.unite(d0 >> 1, d1 >> 1, static_cast<int>((d0 ^ d1) & 1u)))
        conflicts.emplace_back(d0 >> 1, d1 >> 1);
    }
  of_edge_.assign(m, kNone);
  std::vector<HyperplaneId> of_root(m, kNone);
  for (EdgeId e = 0; e < m; ++e) {
    auto r = uf.find(e).first;
    if (of_root[r] == kNone) {
      of_root[r] = static_cast<HyperplaneId>(planes_.size());
      planes_.push_back({c.dart_name(2 * e), {}, {}, true, true});
    }
    of_edge_[e] = of_root[r];
    planes_[of_root[r]].edges.push_back(e);
  }
  for (auto [a, b] : conflicts) planes_[of_edge_[a]].two_sided = false;
  for (const auto& f : c.cubes(2)) {
    auto h0 = of_edge_[f.axis_edge(0)], h1 = of_edge_[f.axis_edge(1)];
    if (h0 == h1)
      planes_[h0].embedded = false;
    else
      crossings_.emplace(std::min(h0, h1), std::max(h0, h1));
  }

  sign_.assign(c.num_darts(), 0);
  positive_darts_.resize(planes_.size());
  for (EdgeId e = 0; e < m; ++e) {
    auto h = of_edge_[e];
    if (!orientable(h)) continue;
    int p = uf.find(e).second ^ uf.find(planes_[h].edges.front()).second;
    sign_[2 * e] = p ? -1 : 1;
    sign_[2 * e + 1] = p ? 1 : -1;
    positive_darts_[h].push_back(p ? 2 * e + 1 : 2 * e);
  }

  carrier_vertices_.assign(planes_.size(), VertexSet(c.num_vertices()));
  half_.assign(2 * planes_.size(), VertexSet(c.num_vertices()));
  for (int k = 1; k <= c.dimension(); ++k)
    for (CellId id = 0; id < c.num_cells(k); ++id) {
      auto f = c.cell_frame(k, id);
      std::vector<HyperplaneId> hs;
      for (int a = 0; a < k; ++a) hs.push_back(axis(f, a));
      std::sort(hs.begin(), hs.end());
      hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
      for (auto h : hs) {
        planes_[h].carrier.push_back({k, id});
        for (auto v : f.corners()) carrier_vertices_[h].insert(v);
      }
    }
  for (DartId d = 0; d < c.num_darts(); ++d)
    if (sign_[d]) half_[2 * of_dart(d) + (sign_[d] > 0 ? 0 : 1)].insert(c.terminus(d));
}

std::optional<HyperplaneId> HyperplaneStructure::find(const CubeComplex& c, const std::string& name) const {
  auto d = c.find_dart(name);
  if (d) return of_dart(*d);
  for (HyperplaneId h = 0; h < planes_.size(); ++h)
    if (planes_[h].name == name) return h;
  return std::nullopt;
}

std::vector<OrientedHyperplane> HyperplaneStructure::orientations(HyperplaneId h) const {
  if (!orientable(h)) return {};
  return {{h, true}, {h, false}};
}

std::vector<DartId> HyperplaneStructure::darts(OrientedHyperplane o) const {
  if (!orientable(o.hyperplane)) throw PreconditionError("hyperplane '" + planes_[o.hyperplane].name + "' is not 2-sided");
  auto out = positive_darts_[o.hyperplane];
  if (!o.positive)
    for (auto& d : out) d ^= 1u;
  return out;
}

bool HyperplaneStructure::crosses(HyperplaneId a, HyperplaneId b) const {
  return crossings_.count({std::min(a, b), std::max(a, b)}) != 0;
}

bool HyperplaneStructure::is_carrier_retract(HyperplaneId h) const {
  if (!orientable(h)) return false;
  return !half_carrier({h, true}).intersects(half_carrier({h, false}));
}

SpecialReport is_special(const CubeComplex& c) { return is_special(c, HyperplaneStructure(c)); }

SpecialReport is_special(const CubeComplex& c, const HyperplaneStructure& hs) {
  SpecialReport r;
  for (HyperplaneId h = 0; h < hs.size(); ++h) {
    if (!hs[h].embedded) r.not_embedded.push_back(h);
    if (!hs[h].two_sided) r.one_sided.push_back(h);
  }
  for (VertexId x = 0; x < c.num_vertices(); ++x) {
    const auto& germs = c.darts_at(x);
    for (std::size_t i = 0; i < germs.size(); ++i)
      for (std::size_t j = i + 1; j < germs.size(); ++j) {
        DartId g = germs[i], k = germs[j];
        auto hg = hs.of_dart(g), hk = hs.of_dart(k);
        if (hg == hk) {
          if (!hs.orientable(hg)) continue;
          Osculation o{hg, hg, x, g, k};
          if (hs.sign(g) == hs.sign(k))
            r.direct_self_osculations.push_back(o);
          else
            r.indirect_self_osculations.push_back(o);
        } else if (hs.crosses(hg, hk) && c.corners_with(2, {g, k}).empty()) {
          r.inter_osculations.push_back({hg, hk, x, g, k});
        }
      }
  }
  r.special = r.not_embedded.empty() && r.one_sided.empty() && r.direct_self_osculations.empty() &&
              r.inter_osculations.empty();
  return r;
}

std::string SpecialReport::describe(const CubeComplex& c, const HyperplaneStructure& hs) const {
  std::ostringstream os;
  os << (special ? "special" : "not special") << "; " << hs.size() << " hyperplanes";
  for (auto h : not_embedded) os << "; self-intersecting: " << hs[h].name;
  for (auto h : one_sided) os << "; one-sided: " << hs[h].name;
  for (const auto& o : direct_self_osculations)
    os << "; direct self-osculation of " << hs[o.h].name << " at " << c.vertex_name(o.at);
  for (const auto& o : inter_osculations)
    os << "; inter-osculation of " << hs[o.h].name << " and " << hs[o.k].name << " at " << c.vertex_name(o.at);
  if (!indirect_self_osculations.empty())
    os << "; " << indirect_self_osculations.size() << " indirect self-osculation(s)";
  return os.str();
}

SimplicialGraph crossing_graph(const HyperplaneStructure& hs) {
  SimplicialGraph g;
  for (const auto& h : hs.all()) g.add_vertex(h.name);
  for (auto [a, b] : hs.crossings()) g.add_edge(a, b);
  return g;
}

SimplicialGraph crossing_graph(const CubeComplex& c) { return crossing_graph(HyperplaneStructure(c)); }

}  // namespace cubecx
