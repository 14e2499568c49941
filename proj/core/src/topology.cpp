#include "cubecx/topology.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <thread>

#include "cubecx/vertex_set.hpp"

namespace cubecx {

unsigned worker_count() {
  if (const char* env = std::getenv("CUBECX_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

Link link(const CubeComplex& c, VertexId v) {
  if (v >= c.num_vertices()) throw PreconditionError("unknown vertex id " + std::to_string(v));
  Link l;
  l.at = v;
  l.germs = c.darts_at(v);
  for (auto d : l.germs) l.labels.push_back(c.label(d));
  for (int k = 2; k <= c.dimension(); ++k)
    for (const auto& f : c.cubes(k))
      for (std::size_t corner = 0; corner < f.num_corners(); ++corner)
        if (f.corner(corner) == v) l.simplices.push_back(f.corner_darts(corner));
  return l;
}

SimplicialGraph link_graph(const CubeComplex& c, VertexId v, bool by_label) {
  const auto& germs = c.darts_at(v);
  bool labelled = by_label;
  for (auto d : germs)
    if (!c.label(d)) labelled = false;
  SimplicialGraph g;
  std::map<DartId, std::size_t> local;
  for (auto d : germs) local[d] = g.add_vertex(labelled ? *c.label(d) : c.dart_name(d));
  for (const auto& f : c.cubes(2))
    for (std::size_t corner = 0; corner < 4; ++corner)
      if (f.corner(corner) == v) {
        auto a = f.away(corner, 0), b = f.away(corner, 1);
        if (a != b) g.add_edge(local[a], local[b]);
      }
  return g;
}

NpcReport is_npc(const CubeComplex& c) {
  NpcReport r;
  auto fail = [&](VertexId v, std::vector<DartId> w, std::string why) {
    r.npc = false;
    r.vertex = v;
    r.witness = std::move(w);
    r.reason = std::move(why);
  };
  // Simpliciality: distinct germs per corner and no repeated simplex.
  for (int k = 2; k <= c.dimension(); ++k)
    for (const auto& f : c.cubes(k))
      for (std::size_t corner = 0; corner < f.num_corners(); ++corner) {
        auto ds = f.corner_darts(corner);
        if (std::adjacent_find(ds.begin(), ds.end()) != ds.end()) {
          fail(f.corner(corner), ds, "a cube corner uses the same germ twice");
          return r;
        }
        if (c.corners_with(k, ds).size() > 1) {
          fail(f.corner(corner), ds, "germs span more than one " + std::to_string(k) + "-cube");
          return r;
        }
      }
  // Flag condition.
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    auto g = link_graph(c, v, false);
    const auto& germs = c.darts_at(v);
    for (const auto& clique : maximal_cliques(g)) {
      if (clique.size() < 3) continue;
      std::vector<DartId> ds;
      for (auto i : clique) ds.push_back(germs[i]);
      std::sort(ds.begin(), ds.end());
      if (c.corners_with(static_cast<int>(ds.size()), ds).empty()) {
        fail(v, ds, "clique of " + std::to_string(ds.size()) + " germs spans no cube");
        return r;
      }
    }
  }
  return r;
}

CubeComplex flag_fill(const CubeComplex& c) {
  ComplexBuilder b(c);
  b.flag_fill();
  return b.build();
}

Subcomplex induced_subcomplex(const CubeComplex& c, const std::vector<VertexId>& vertices) {
  VertexSet in(c.num_vertices());
  for (auto v : vertices) in.insert(v);
  ComplexBuilder b;
  std::vector<VertexId> vmap(c.num_vertices(), kNone);
  std::vector<VertexId> inc_v;
  for (VertexId v = 0; v < c.num_vertices(); ++v)
    if (in.contains(v)) {
      vmap[v] = b.add_vertex(c.vertex_name(v));
      inc_v.push_back(v);
    }
  std::vector<DartId> dmap(c.num_darts(), kNone);
  std::vector<DartId> inc_d;
  for (DartId d = 0; d < c.num_darts(); d += 2)
    if (in.contains(c.origin(d)) && in.contains(c.terminus(d))) {
      auto nd = b.add_edge(vmap[c.origin(d)], vmap[c.terminus(d)], c.dart_name(d), c.dart_name(d + 1),
                           c.label(d), c.label(d + 1));
      dmap[d] = nd;
      dmap[d + 1] = nd + 1;
      inc_d.push_back(d);
      inc_d.push_back(d + 1);
    }
  for (int k = 2; k <= c.dimension(); ++k)
    for (const auto& f : c.cubes(k)) {
      bool inside = std::all_of(f.corners().begin(), f.corners().end(), [&](VertexId v) { return in.contains(v); });
      if (!inside) continue;
      b.add_cube(f.mapped([&](VertexId v) { return vmap[v]; }, [&](DartId d) { return dmap[d]; }));
    }
  Subcomplex s{b.build(), {}};
  s.inclusion = make_cubical_map(s.complex, c, std::move(inc_v), std::move(inc_d));
  return s;
}

std::vector<std::size_t> vertex_components(const CubeComplex& c) {
  std::vector<std::size_t> label(c.num_vertices(), SIZE_MAX);
  std::size_t next = 0;
  for (VertexId s = 0; s < c.num_vertices(); ++s) {
    if (label[s] != SIZE_MAX) continue;
    std::vector<VertexId> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto d : c.darts_at(v)) {
        auto w = c.terminus(d);
        if (label[w] == SIZE_MAX) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<Subcomplex> components(const CubeComplex& c) {
  auto label = vertex_components(c);
  std::size_t n = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
  std::vector<std::vector<VertexId>> groups(n);
  for (VertexId v = 0; v < c.num_vertices(); ++v) groups[label[v]].push_back(v);
  std::vector<Subcomplex> out;
  for (auto& g : groups) out.push_back(induced_subcomplex(c, g));
  return out;
}

long euler_characteristic(const CubeComplex& c) { return c.euler_characteristic(); }

bool locally_convex_image(const CubeComplex& c, const CubicalMap& inc, std::string* why) {
  std::vector<char> in_v(c.num_vertices(), 0), in_d(c.num_darts(), 0);
  for (auto v : inc.vertex_map) in_v[v] = 1;
  for (auto d : inc.dart_map)
    if (d != kNone) in_d[d] = 1;
  for (int k = 2; k <= c.dimension(); ++k) {
    std::set<CellId> image;
    if (static_cast<std::size_t>(k) < inc.cube_map.size()) image = {inc.cube_map[k].begin(), inc.cube_map[k].end()};
    for (CellId id = 0; id < c.cubes(k).size(); ++id) {
      if (image.count(id)) continue;
      const auto& f = c.cube(k, id);
      for (std::size_t t = 0; t < f.num_corners(); ++t) {
        if (!in_v[f.corner(t)]) continue;
        bool all = true;
        for (int i = 0; i < k && all; ++i) all = in_d[f.away(t, i)] != 0;
        if (all) {
          if (why) *why = "a " + std::to_string(k) + "-cube at " + c.vertex_name(f.corner(t)) + " spans image darts but is not in the image";
          return false;
        }
      }
    }
  }
  return true;
}

namespace {

MedianReport median_on(std::size_t n, const std::vector<std::vector<std::size_t>>& adj) {
  MedianReport r;
  if (n == 0) return r;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> q{s};
    dist[s][s] = 0;
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (auto w : adj[v])
        if (dist[s][w] < 0) {
          dist[s][w] = dist[s][v] + 1;
          q.push_back(w);
        }
    }
    for (std::size_t t = 0; t < n; ++t)
      if (dist[s][t] < 0) throw PreconditionError("median check needs a connected graph");
  }
  // Interval I(a,b) as a vertex set.
  std::vector<VertexSet> interval(n * n, VertexSet(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      auto& s = interval[a * n + b];
      for (std::size_t m = 0; m < n; ++m)
        if (dist[a][m] + dist[m][b] == dist[a][b]) s.insert(m);
      interval[b * n + a] = s;
    }
  const unsigned workers = std::max(1u, std::min<unsigned>(worker_count(), static_cast<unsigned>(n)));
  std::vector<std::optional<std::array<std::size_t, 4>>> found(workers);
  auto job = [&](unsigned w) {
    for (std::size_t a = w; a < n; a += workers)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t cc = b + 1; cc < n; ++cc) {
          auto m = interval[a * n + b] & interval[b * n + cc] & interval[a * n + cc];
          auto count = m.count();
          if (count != 1) {
            std::array<std::size_t, 4> hit{a, b, cc, count};
            if (!found[w] || hit < *found[w]) found[w] = hit;
            return;
          }
        }
  };
  if (workers == 1) {
    job(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(job, w);
    for (auto& t : pool) t.join();
  }
  std::optional<std::array<std::size_t, 4>> best;
  for (auto& f : found)
    if (f && (!best || *f < *best)) best = f;
  if (best) {
    r.median = false;
    r.witness = std::array<VertexId, 3>{static_cast<VertexId>((*best)[0]), static_cast<VertexId>((*best)[1]),
                                        static_cast<VertexId>((*best)[2])};
    r.reason = (*best)[3] == 0 ? "triple has no median" : "triple has several medians";
  }
  return r;
}

}  // namespace

MedianReport is_median_graph(const CubeComplex& c) {
  const std::size_t n = c.num_vertices();
  std::vector<std::vector<std::size_t>> adj(n);
  for (DartId d = 0; d < c.num_darts(); ++d) {
    auto a = c.origin(d), b = c.terminus(d);
    if (a == b) return {false, std::array<VertexId, 3>{a, a, a}, "loop at a vertex"};
    if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end())
      return {false, std::array<VertexId, 3>{a, b, b}, "multiple edges between two vertices"};
    adj[a].push_back(b);
  }
  return median_on(n, adj);
}

MedianReport is_median_graph(const SimplicialGraph& g) {
  std::vector<std::vector<std::size_t>> adj(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) adj[v].assign(g.neighbours(v).begin(), g.neighbours(v).end());
  return median_on(g.order(), adj);
}

}  // namespace cubecx
