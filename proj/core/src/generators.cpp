#include "cubecx/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "cubecx/colouring.hpp"
#include "cubecx/hyperplanes.hpp"
#include "cubecx/topology.hpp"
#include "frames.hpp"

namespace cubecx {

namespace {

using Mask = std::uint64_t;

bool bit(Mask m, std::size_t i) { return (m >> i) & 1u; }

std::string subset_name(const SimplicialGraph& g, Mask m) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (bit(m, i)) {
      if (!first) s += ",";
      s += g.name(i);
      first = false;
    }
  return s + "}";
}

void add_frame(ComplexBuilder& b, const std::optional<CubeFrame>& f) {
  if (!f) throw InternalConsistencyError("generator produced a cube that does not close up");
  b.add_cube(*f);
}

// Matchings of g with at least `min` edges, as lists of edge indices.
void matchings(const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t from, Mask used,
               std::vector<std::size_t>& cur, std::size_t min, std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() >= min) out.push_back(cur);
  for (std::size_t e = from; e < edges.size(); ++e) {
    auto [p, q] = edges[e];
    if (bit(used, p) || bit(used, q)) continue;
    cur.push_back(e);
    matchings(edges, e + 1, used | (Mask{1} << p) | (Mask{1} << q), cur, min, out);
    cur.pop_back();
  }
}

}  // namespace

CubeComplex salvetti(const SimplicialGraph& g) {
  ComplexBuilder b;
  auto star = b.add_vertex("*");
  std::vector<DartId> loop(g.order());
  for (std::size_t v = 0; v < g.order(); ++v)
    loop[v] = b.add_edge(star, star, g.name(v), g.name(v) + "~", g.name(v) + "+", g.name(v) + "-");
  for (const auto& k : all_cliques(g, 2, g.order())) {
    auto f = detail::walk_frame(b.view(), star, static_cast<int>(k.size()),
                                [&](VertexId, int i, bool up) { return loop[k[i]] ^ (up ? 0u : 1u); });
    add_frame(b, f);
  }
  return b.build();
}

PatternedComplex droms(const SimplicialGraph& g) {
  const std::size_t n = g.order();
  if (n > 20) throw PreconditionError("droms complex limited to 20 graph vertices");
  ComplexBuilder b;
  const Mask total = Mask{1} << n;
  for (Mask x = 0; x < total; ++x) {
    std::string name(n, '0');
    for (std::size_t i = 0; i < n; ++i)
      if (bit(x, i)) name[i] = '1';
    if (n == 0) name = "()";
    b.add_vertex(name);
  }
  std::vector<DartId> up(total * n, kNone);
  for (Mask x = 0; x < total; ++x)
    for (std::size_t i = 0; i < n; ++i)
      if (!bit(x, i)) {
        const auto& v = g.name(i);
        up[x * n + i] = b.add_edge(static_cast<VertexId>(x), static_cast<VertexId>(x | (Mask{1} << i)),
                                   v + "@" + b.view().vertex_name(static_cast<VertexId>(x)), {}, v + "+", v + "-");
      }
  for (const auto& k : all_cliques(g, 2, n)) {
    Mask km = 0;
    for (auto v : k) km |= Mask{1} << v;
    for (Mask x = 0; x < total; ++x) {
      if (x & km) continue;
      auto f = detail::walk_frame(b.view(), static_cast<VertexId>(x), static_cast<int>(k.size()),
                                  [&](VertexId at, int i, bool dir) {
                                    Mask m = at;
                                    return dir ? up[m * n + k[i]] : up[(m ^ (Mask{1} << k[i])) * n + k[i]] ^ 1u;
                                  });
      add_frame(b, f);
    }
  }
  PatternedComplex out{b.build(), {}};
  HyperplaneStructure hs(out.complex);
  out.pattern.colouring = colouring_from_labels(out.complex, hs, g);
  for (std::size_t v = 0; v < n; ++v) {
    Tripartition t{"H" + g.name(v), {}, VertexSet(total), VertexSet(total)};
    for (HyperplaneId h = 0; h < hs.size(); ++h)
      if (out.pattern.colouring.colour_of[h] == v) t.zero.push_back(h);
    for (Mask x = 0; x < total; ++x) (bit(x, v) ? t.plus : t.minus).insert(x);
    out.pattern.partitions.push_back(std::move(t));
  }
  return out;
}

SimplicialGraph edge_graph(const SimplicialGraph& g) {
  auto edges = g.edges();
  SimplicialGraph e;
  for (auto [p, q] : edges) e.add_vertex(g.name(p) + "-" + g.name(q));
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a != c && a != d && b != c && b != d) e.add_edge(i, j);
    }
  return e;
}

PatternedComplex configuration_space(const SimplicialGraph& g, std::size_t n) {
  const std::size_t nv = g.order();
  if (n > nv) throw PreconditionError("configuration space needs n <= number of graph vertices");
  if (nv > 24) throw PreconditionError("configuration space limited to 24 graph vertices");
  if (nv > 0) {
    auto comp = component_labels(g);
    if (std::any_of(comp.begin(), comp.end(), [](std::size_t c) { return c != 0; }))
      throw PreconditionError("configuration space needs a connected graph");
  }
  ComplexBuilder b;
  std::map<Mask, VertexId> id;
  std::vector<Mask> subsets;
  for (Mask m = 0; m < (Mask{1} << nv); ++m)
    if (static_cast<std::size_t>(std::popcount(m)) == n) subsets.push_back(m);
  std::sort(subsets.begin(), subsets.end(), [&](Mask a, Mask b2) {
    // lexicographic on the sorted member list
    for (std::size_t i = 0; i < nv; ++i)
      if (bit(a, i) != bit(b2, i)) return bit(a, i);
    return false;
  });
  for (auto m : subsets) id[m] = b.add_vertex(subset_name(g, m));

  auto edges = g.edges();  // p < q
  std::vector<std::string> colour(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) colour[e] = g.name(edges[e].first) + "-" + g.name(edges[e].second);
  // move[(T, e)] = dart T -> T - p + q
  std::map<std::pair<Mask, std::size_t>, DartId> move;
  for (auto m : subsets)
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [p, q] = edges[e];
      if (!bit(m, p) || bit(m, q)) continue;
      Mask t = (m & ~(Mask{1} << p)) | (Mask{1} << q);
      move[{m, e}] = b.add_edge(id[m], id[t], colour[e] + "@" + subset_name(g, m), {}, colour[e] + "+", colour[e] + "-");
    }
  std::vector<std::vector<std::size_t>> ms;
  std::vector<std::size_t> cur;
  matchings(edges, 0, 0, cur, 2, ms);
  std::vector<Mask> inv(b.view().num_vertices());
  for (auto& [m, v] : id) inv[v] = m;
  for (const auto& mt : ms) {
    if (mt.size() > n) continue;
    Mask covered = 0, base_tokens = 0;
    for (auto e : mt) {
      covered |= (Mask{1} << edges[e].first) | (Mask{1} << edges[e].second);
      base_tokens |= Mask{1} << edges[e].first;
    }
    for (auto s0 : subsets) {
      // s0 ranges over n-subsets; keep those equal to S0 ∪ {p_i}.
      if ((s0 & covered) != base_tokens) continue;
      auto f = detail::walk_frame(b.view(), id[s0], static_cast<int>(mt.size()), [&](VertexId at, int i, bool dir) {
        Mask m = inv[at];
        auto e = mt[i];
        if (dir) {
          auto it = move.find({m, e});
          return it == move.end() ? kNone : it->second;
        }
        Mask back = (m & ~(Mask{1} << edges[e].second)) | (Mask{1} << edges[e].first);
        auto it = move.find({back, e});
        return it == move.end() ? kNone : it->second ^ 1u;
      });
      add_frame(b, f);
    }
  }
  PatternedComplex out{b.build(), {}};
  HyperplaneStructure hs(out.complex);
  // Colours that occur, with E(g) adjacency.
  auto full = edge_graph(g);
  std::vector<char> seen(edges.size(), 0);
  for (DartId d = 0; d < out.complex.num_darts(); d += 2) {
    const auto& lab = *out.complex.label(d);
    seen[full.index(lab.substr(0, lab.size() - 1))] = 1;
  }
  std::vector<std::size_t> keep;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (seen[e]) keep.push_back(e);
  auto cg = full.induced(keep);
  out.pattern.colouring = colouring_from_labels(out.complex, hs, cg);
  const std::size_t nvtx = out.complex.num_vertices();
  for (std::size_t a = 0; a < nv; ++a) {
    Tripartition t{"H" + g.name(a), {}, VertexSet(nvtx), VertexSet(nvtx)};
    for (HyperplaneId h = 0; h < hs.size(); ++h) {
      const auto& lab = *out.complex.label(2 * hs[h].edges.front());
      auto e = full.index(lab.substr(0, lab.size() - 1));
      if (edges[e].first == a || edges[e].second == a) t.zero.push_back(h);
    }
    for (VertexId v = 0; v < nvtx; ++v) (bit(inv[v], a) ? t.plus : t.minus).insert(v);
    out.pattern.partitions.push_back(std::move(t));
  }
  return out;
}

SimplicialGraph octahedralisation(const SimplicialGraph& g, std::size_t n) {
  if (n < 1) throw PreconditionError("octahedralisation needs N >= 1");
  SimplicialGraph o;
  auto id = [&](std::size_t v, std::size_t i, int s) { return (v * n + i) * 2 + s; };
  for (std::size_t v = 0; v < g.order(); ++v)
    for (std::size_t i = 0; i < n; ++i) {
      o.add_vertex(g.name(v) + "." + std::to_string(i + 1) + "+");
      o.add_vertex(g.name(v) + "." + std::to_string(i + 1) + "-");
    }
  for (auto [v, w] : g.edges())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (int s = 0; s < 2; ++s)
          for (int t = 0; t < 2; ++t) o.add_edge(id(v, i, s), id(w, j, t));
  return o;
}

SimplicialGraph half_octahedralisation(const SimplicialGraph& g, std::size_t n) {
  if (n < 1) throw PreconditionError("half octahedralisation needs N >= 1");
  SimplicialGraph o;
  for (std::size_t v = 0; v < g.order(); ++v)
    for (std::size_t i = 0; i < n; ++i) o.add_vertex(g.name(v) + "." + std::to_string(i + 1));
  for (auto [v, w] : g.edges())
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) o.add_edge(v * n + i, w * n + j);
  return o;
}

DoubleCover double_cover(const CubeComplex& q, const std::vector<HyperplaneId>& s) {
  HyperplaneStructure hs(q);
  std::vector<char> in_s(hs.size(), 0);
  for (auto h : s) in_s.at(h) = 1;
  auto flips = [&](DartId d) -> unsigned { return in_s[hs.of_dart(d)] ? 1u : 0u; };

  ComplexBuilder b;
  for (VertexId v = 0; v < q.num_vertices(); ++v) {
    b.add_vertex(q.vertex_name(v) + "/0");
    b.add_vertex(q.vertex_name(v) + "/1");
  }
  // lift[2*d + sheet] = dart of the cover over d starting on `sheet`
  std::vector<DartId> lift(2 * q.num_darts(), kNone);
  for (DartId d = 0; d < q.num_darts(); d += 2) {
    for (unsigned sheet = 0; sheet < 2; ++sheet) {
      unsigned other = sheet ^ flips(d);
      auto nd = b.add_edge(2 * q.origin(d) + sheet, 2 * q.terminus(d) + other, q.dart_name(d) + "/" + std::to_string(sheet),
                           q.dart_name(d + 1) + "/" + std::to_string(other), q.label(d), q.label(d + 1));
      lift[2 * d + sheet] = nd;
      lift[2 * (d + 1) + other] = nd + 1;
    }
  }
  std::vector<VertexId> vproj(2 * q.num_vertices());
  for (VertexId v = 0; v < vproj.size(); ++v) vproj[v] = v / 2;
  std::vector<DartId> dproj(2 * q.num_darts());
  for (DartId d = 0; d < q.num_darts(); ++d)
    for (unsigned sheet = 0; sheet < 2; ++sheet) dproj[lift[2 * d + sheet]] = d;
  for (int k = 2; k <= q.dimension(); ++k)
    for (const auto& f : q.cubes(k))
      for (unsigned sheet = 0; sheet < 2; ++sheet) {
        std::vector<unsigned> at(f.num_corners());
        at[0] = sheet;
        for (std::size_t c = 1; c < f.num_corners(); ++c) {
          int top = std::bit_width(c) - 1;
          auto prev = c ^ (std::size_t{1} << top);
          at[c] = at[prev] ^ flips(f.away(prev, top));
        }
        std::vector<VertexId> corners(f.num_corners());
        std::vector<DartId> away(f.away_darts().size());
        for (std::size_t c = 0; c < f.num_corners(); ++c) {
          corners[c] = 2 * f.corner(c) + at[c];
          for (int i = 0; i < k; ++i) away[c * k + i] = lift[2 * f.away(c, i) + at[c]];
        }
        b.add_cube(CubeFrame(k, std::move(corners), std::move(away)));
      }
  DoubleCover out{b.build(), {}, false};
  out.projection = make_cubical_map(out.complex, q, std::move(vproj), std::move(dproj));
  auto comp = vertex_components(out.complex);
  out.connected = std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
  return out;
}

namespace {

struct Named {
  ComplexBuilder b;
  VertexId v(const std::string& name) {
    if (auto id = b.view().find_vertex(name)) return *id;
    return b.add_vertex(name);
  }
  DartId e(const std::string& from, const std::string& to, const std::string& name) {
    return b.add_edge(v(from), v(to), name);
  }
  void sq(DartId a, DartId bb, DartId c, DartId d) { b.add_square({a, bb, c, d}); }
};

// Three squares: S0 = x,T,Rt,Bt; S1 hangs off the diagonal Bt-T through
// e, e'; S2 off the diagonal x-Rt through f, f'. `mirror` attaches S2 to
// the diagonal the other way round.
CubeComplex fig3(bool with_s2, bool mirror) {
  Named n;
  for (auto s : {"x", "T", "Rt", "Bt"}) n.v(s);
  auto p = n.e("x", "T", "p");
  auto q = n.e("T", "Rt", "q");
  auto r = n.e("Bt", "Rt", "r");
  auto s = n.e("x", "Bt", "s");
  n.sq(p, q, r ^ 1u, s ^ 1u);
  auto c1 = n.e("Bt", "T", "c1");
  auto e = n.e("T", "A", "e");
  auto e2 = n.e("A", "B", "e'");
  auto g1 = n.e("B", "Bt", "g1");
  n.sq(c1, e, e2, g1);
  if (with_s2) {
    const char* from = mirror ? "Rt" : "x";
    const char* to = mirror ? "x" : "Rt";
    auto c2 = n.e(from, to, "c2");
    auto f = n.e(to, "C", "f");
    auto f2 = n.e("C", "D", "f'");
    auto g2 = n.e("D", from, "g2");
    n.sq(c2, f, f2, g2);
  }
  return n.b.build();
}

CubeComplex fig3_right() {
  Named n;
  auto a1 = n.e("x", "y", "a1");
  auto a2 = n.e("y", "x", "a2");
  auto b1 = n.e("x", "y", "b1");
  auto b2 = n.e("y", "x", "b2");
  n.sq(a1, b2, a2 ^ 1u, b1 ^ 1u);
  n.sq(a2, b1, a1 ^ 1u, b2 ^ 1u);
  return n.b.build();
}

// Dual square complex of the pants/seam curve system on the genus-2 surface:
// one vertex per hexagon (front/back, top/bottom), blue curves b1..b3 and red
// curves r1..r3, each dual to two edges.
Fixture genus2() {
  Named n;
  for (auto s : {"FT", "FB", "BT", "BB"}) n.v(s);
  std::vector<DartId> bf, bb, rt, rb;
  for (int i = 1; i <= 3; ++i) bf.push_back(n.e("FT", "FB", "b" + std::to_string(i)));
  for (int i = 1; i <= 3; ++i) rt.push_back(n.e("FT", "BT", "r" + std::to_string(i)));
  for (int i = 1; i <= 3; ++i) bb.push_back(n.e("BT", "BB", "b" + std::to_string(i) + "'"));
  for (int i = 1; i <= 3; ++i) rb.push_back(n.e("FB", "BB", "r" + std::to_string(i) + "'"));
  const int cross[6][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 0}};
  for (auto& c : cross) n.sq(bf[c[0]], rb[c[1]], bb[c[0]] ^ 1u, rt[c[1]] ^ 1u);
  Fixture fx{"genus2", n.b.build(), std::nullopt, std::nullopt};
  HyperplaneStructure hs(fx.complex);
  auto col = standard_colouring(fx.complex, hs);
  const auto& c = fx.complex;
  auto nv = c.num_vertices();
  Tripartition blue{"B", {}, VertexSet(nv), VertexSet(nv)};
  Tripartition red{"R", {}, VertexSet(nv), VertexSet(nv)};
  for (HyperplaneId h = 0; h < hs.size(); ++h) (hs[h].name[0] == 'b' ? blue : red).zero.push_back(h);
  for (auto s : {"FT", "BT"}) blue.minus.insert(c.vertex(s));
  for (auto s : {"FB", "BB"}) blue.plus.insert(c.vertex(s));
  for (auto s : {"FT", "FB"}) red.minus.insert(c.vertex(s));
  for (auto s : {"BT", "BB"}) red.plus.insert(c.vertex(s));
  fx.complex = with_colouring_labels(c, hs, col);
  fx.colouring = col;
  fx.pattern = DividingPattern{col, {blue, red}};
  return fx;
}

// The colouring with {e, f} and {e', f'} merged, oriented so that the
// merged positive half-carriers face away from S0.
SpecialColouring fig3_left_colouring(const CubeComplex& c, const HyperplaneStructure& hs) {
  auto h = [&](const char* dart) { return hs.of_dart(c.dart(dart)); };
  std::vector<std::vector<HyperplaneId>> classes;
  std::vector<char> used(hs.size(), 0);
  std::vector<std::vector<HyperplaneId>> merged = {{h("e"), h("f")}, {h("e'"), h("f'")}};
  for (auto& m : merged) {
    std::sort(m.begin(), m.end());
    for (auto x : m) used[x] = 1;
  }
  for (HyperplaneId k = 0; k < hs.size(); ++k) {
    if (used[k] == 2) continue;
    if (used[k] == 1) {
      for (auto& m : merged)
        if (std::find(m.begin(), m.end(), k) != m.end()) {
          classes.push_back(m);
          for (auto x : m) used[x] = 2;
        }
      continue;
    }
    classes.push_back({k});
  }
  std::vector<bool> flipped(hs.size(), false);
  for (auto x : {h("e"), h("f")}) {
    const auto& pos = hs.half_carrier({x, true});
    flipped[x] = !(pos.contains(c.vertex("A")) || pos.contains(c.vertex("C")));
  }
  return colouring_from_classes(hs, classes, flipped);
}

}  // namespace

std::vector<std::string> fixture_names() { return {"fig3-left", "fig3-left-mirror", "fig3-middle", "fig3-right", "genus2"}; }

Fixture fixture(const std::string& name) {
  if (name == "genus2") return genus2();
  if (name == "fig3-right") return {name, fig3_right(), std::nullopt, std::nullopt};
  if (name == "fig3-middle") return {name, fig3(false, false), std::nullopt, std::nullopt};
  if (name == "fig3-left" || name == "fig3-left-mirror") {
    Fixture fx{name, fig3(true, name != "fig3-left"), std::nullopt, std::nullopt};
    HyperplaneStructure hs(fx.complex);
    fx.colouring = fig3_left_colouring(fx.complex, hs);
    return fx;
  }
  throw PreconditionError("unknown fixture '" + name + "'");
}

}  // namespace cubecx
