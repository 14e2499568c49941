#include "cubecx/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace cubecx {

namespace {

using Signature = std::vector<std::string>;

// Joint colour refinement of the vertices of a and b.
std::pair<std::vector<int>, std::vector<int>> vertex_colours(const CubeComplex& a, const CubeComplex& b,
                                                             bool labels) {
  auto initial = [&](const CubeComplex& c, VertexId v) {
    Signature s;
    s.push_back(std::to_string(c.darts_at(v).size()));
    std::size_t loops = 0;
    for (auto d : c.darts_at(v)) loops += c.terminus(d) == v;
    s.push_back(std::to_string(loops));
    for (int k = 2; k <= std::max(a.dimension(), b.dimension()); ++k) {
      std::size_t n = 0;
      for (const auto& f : c.cubes(k))
        for (auto x : f.corners()) n += x == v;
      s.push_back(std::to_string(n));
    }
    if (labels) {
      std::vector<std::string> ls;
      for (auto d : c.darts_at(v)) ls.push_back(c.label(d).value_or(""));
      std::sort(ls.begin(), ls.end());
      s.insert(s.end(), ls.begin(), ls.end());
    }
    return s;
  };
  std::map<Signature, int> dict;
  std::vector<Signature> sa, sb;
  for (VertexId v = 0; v < a.num_vertices(); ++v) sa.push_back(initial(a, v));
  for (VertexId v = 0; v < b.num_vertices(); ++v) sb.push_back(initial(b, v));
  auto assign = [&](std::vector<int>& ca, std::vector<int>& cb) {
    dict.clear();
    for (auto& s : sa) dict.emplace(s, 0);
    for (auto& s : sb) dict.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : dict) v = next++;
    ca.resize(sa.size());
    cb.resize(sb.size());
    for (std::size_t i = 0; i < sa.size(); ++i) ca[i] = dict[sa[i]];
    for (std::size_t i = 0; i < sb.size(); ++i) cb[i] = dict[sb[i]];
    return dict.size();
  };
  std::vector<int> ca, cb;
  std::size_t classes = assign(ca, cb);
  for (int round = 0; round < 32; ++round) {
    auto refine = [&](const CubeComplex& c, const std::vector<int>& col, VertexId v) {
      std::vector<std::string> parts;
      for (auto d : c.darts_at(v))
        parts.push_back((labels ? c.label(d).value_or("") : std::string()) + "|" + std::to_string(col[c.terminus(d)]));
      std::sort(parts.begin(), parts.end());
      Signature s{std::to_string(col[v])};
      s.insert(s.end(), parts.begin(), parts.end());
      return s;
    };
    for (VertexId v = 0; v < a.num_vertices(); ++v) sa[v] = refine(a, ca, v);
    for (VertexId v = 0; v < b.num_vertices(); ++v) sb[v] = refine(b, cb, v);
    std::size_t now = assign(ca, cb);
    if (now == classes) break;
    classes = now;
  }
  return {ca, cb};
}

class Search {
 public:
  Search(const CubeComplex& a, const CubeComplex& b, bool labels) : a_(a), b_(b), labels_(labels) {
    std::tie(ca_, cb_) = vertex_colours(a, b, labels);
    vmap_.assign(a.num_vertices(), kNone);
    vinv_.assign(b.num_vertices(), kNone);
    dmap_.assign(a.num_darts(), kNone);
    dinv_.assign(b.num_darts(), kNone);
    squares_of_edge_.resize(a.num_edges());
    for (CellId s = 0; s < a.num_cells(2); ++s) {
      const auto& f = a.cube(2, s);
      for (std::size_t c = 0; c < 4; ++c)
        for (int i = 0; i < 2; ++i) {
          auto e = f.away(c, i) >> 1;
          auto& list = squares_of_edge_[e];
          if (std::find(list.begin(), list.end(), s) == list.end()) list.push_back(s);
        }
    }
  }

  bool run() {
    auto sa = ca_, sb = cb_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb && extend();
  }
  std::vector<VertexId> vmap() const { return vmap_; }
  std::vector<DartId> dmap() const { return dmap_; }

 private:
  bool same_label(DartId d, DartId e) const { return !labels_ || a_.label(d) == b_.label(e); }

  bool squares_ok(EdgeId e) const {
    for (auto s : squares_of_edge_[e]) {
      const auto& f = a_.cube(2, s);
      bool ready = true;
      for (std::size_t c = 0; c < 4 && ready; ++c)
        for (int i = 0; i < 2; ++i)
          if (dmap_[f.away(c, i)] == kNone) ready = false;
      if (!ready) continue;
      auto img = f.mapped([&](VertexId v) { return vmap_[v]; }, [&](DartId d) { return dmap_[d]; });
      if (!b_.find_cell(img)) return false;
    }
    return true;
  }

  bool finished() const {
    for (int k = 3; k <= a_.dimension(); ++k)
      for (const auto& f : a_.cubes(k)) {
        auto img = f.mapped([&](VertexId v) { return vmap_[v]; }, [&](DartId d) { return dmap_[d]; });
        if (!b_.find_cell(img)) return false;
      }
    return true;
  }

  void map_vertex(VertexId v, VertexId w) {
    vmap_[v] = w;
    vinv_[w] = v;
  }
  void unmap_vertex(VertexId v) {
    vinv_[vmap_[v]] = kNone;
    vmap_[v] = kNone;
  }

  bool extend() {
    // Next dart: lowest unmapped dart leaving a mapped vertex.
    DartId next = kNone;
    for (DartId d = 0; d < a_.num_darts(); ++d)
      if (dmap_[d] == kNone && vmap_[a_.origin(d)] != kNone) {
        next = d;
        break;
      }
    if (next == kNone) {
      VertexId seed = kNone;
      for (VertexId v = 0; v < a_.num_vertices(); ++v)
        if (vmap_[v] == kNone) {
          seed = v;
          break;
        }
      if (seed == kNone) return finished();
      std::vector<VertexId> cands;
      if (auto same = b_.find_vertex(a_.vertex_name(seed)); same && vinv_[*same] == kNone && cb_[*same] == ca_[seed])
        cands.push_back(*same);
      for (VertexId w = 0; w < b_.num_vertices(); ++w)
        if (vinv_[w] == kNone && cb_[w] == ca_[seed] && (cands.empty() || cands[0] != w)) cands.push_back(w);
      for (auto w : cands) {
        map_vertex(seed, w);
        if (extend()) return true;
        unmap_vertex(seed);
      }
      return false;
    }
    const VertexId from = vmap_[a_.origin(next)];
    const VertexId t = a_.terminus(next);
    const bool loop = a_.origin(next) == t;
    std::vector<DartId> cands;
    auto consider = [&](DartId e) {
      if (dinv_[e] != kNone || !same_label(next, e) || !same_label(next ^ 1u, e ^ 1u)) return;
      auto te = b_.terminus(e);
      if (loop != (b_.origin(e) == te)) return;
      if (vmap_[t] != kNone) {
        if (vmap_[t] != te) return;
      } else if (vinv_[te] != kNone || cb_[te] != ca_[t]) {
        return;
      }
      if (std::find(cands.begin(), cands.end(), e) == cands.end()) cands.push_back(e);
    };
    if (auto same = b_.find_dart(a_.dart_name(next)); same && b_.origin(*same) == from) consider(*same);
    for (auto e : b_.darts_at(from)) consider(e);
    for (auto e : cands) {
      bool new_vertex = vmap_[t] == kNone;
      if (new_vertex) map_vertex(t, b_.terminus(e));
      dmap_[next] = e;
      dmap_[next ^ 1u] = e ^ 1u;
      dinv_[e] = next;
      dinv_[e ^ 1u] = next ^ 1u;
      if (squares_ok(next >> 1) && extend()) return true;
      dinv_[e] = dinv_[e ^ 1u] = kNone;
      dmap_[next] = dmap_[next ^ 1u] = kNone;
      if (new_vertex) unmap_vertex(t);
    }
    return false;
  }

  const CubeComplex& a_;
  const CubeComplex& b_;
  bool labels_;
  std::vector<int> ca_, cb_;
  std::vector<VertexId> vmap_, vinv_;
  std::vector<DartId> dmap_, dinv_;
  std::vector<std::vector<CellId>> squares_of_edge_;
};

}  // namespace

std::optional<CubicalMap> is_isomorphic(const CubeComplex& a, const CubeComplex& b, bool respect_labels) {
  if (a.dimension() != b.dimension()) return std::nullopt;
  for (int k = 0; k <= std::max(1, a.dimension()); ++k)
    if (a.num_cells(k) != b.num_cells(k)) return std::nullopt;
  if (respect_labels) {
    std::vector<std::string> la, lb;
    for (DartId d = 0; d < a.num_darts(); ++d) la.push_back(a.label(d).value_or(""));
    for (DartId d = 0; d < b.num_darts(); ++d) lb.push_back(b.label(d).value_or(""));
    std::sort(la.begin(), la.end());
    std::sort(lb.begin(), lb.end());
    if (la != lb) return std::nullopt;
  }
  Search s(a, b, respect_labels);
  if (!s.run()) return std::nullopt;
  return make_cubical_map(a, b, s.vmap(), s.dmap());
}

}  // namespace cubecx
