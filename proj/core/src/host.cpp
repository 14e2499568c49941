#include "cubecx/host.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cubecx/collapse.hpp"
#include "cubecx/colouring.hpp"
#include "cubecx/hyperplanes.hpp"
#include "cubecx/topology.hpp"
#include "frames.hpp"

namespace cubecx {

namespace {

struct Sides {
  std::vector<std::array<VertexSet, 2>> side;  // [i][0] = minus, [i][1] = plus
};

Sides sides_of(const CubeComplex& q, const DividingPattern& p) {
  Sides s;
  for (const auto& t : p.partitions) {
    if (t.minus.universe() != q.num_vertices() || t.plus.universe() != q.num_vertices())
      throw PreconditionError("partition " + t.name + " has the wrong vertex universe");
    s.side.push_back({t.minus, t.plus});
  }
  return s;
}

std::string sign_name(const std::string& signs) { return signs.empty() ? "*" : signs; }

int sign_bit(char c) { return c == '+' ? 1 : 0; }

// Sign vectors of 𝔼 in depth-first order, '-' before '+'.
std::vector<std::string> sign_vectors(const Sides& s, bool full_cube) {
  const std::size_t n = s.side.size();
  if (n > 24) throw PreconditionError("more than 24 partitions");
  std::vector<std::string> out;
  std::string cur(n, '-');
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (char c : {'-', '+'}) {
      const auto& mine = s.side[i][sign_bit(c)];
      bool ok = full_cube || !mine.empty();
      for (std::size_t j = 0; ok && !full_cube && j < i; ++j) ok = mine.intersects(s.side[j][sign_bit(cur[j])]);
      if (!ok) continue;
      cur[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::string> partition_names(const DividingPattern& p) {
  std::vector<std::string> names;
  for (const auto& t : p.partitions) names.push_back(t.name);
  return names;
}

ComplexBuilder e_builder(const std::vector<std::string>& signs, const std::vector<std::string>& names) {
  ComplexBuilder b;
  for (const auto& s : signs) b.add_vertex(sign_name(s));
  const std::size_t n = names.size();
  std::map<std::pair<VertexId, std::size_t>, DartId> up;
  for (VertexId x = 0; x < signs.size(); ++x)
    for (std::size_t i = 0; i < n; ++i) {
      if (signs[x][i] != '-') continue;
      auto y = signs[x];
      y[i] = '+';
      auto yid = b.view().find_vertex(y);
      if (!yid) continue;
      up[{x, i}] = b.add_edge(x, *yid, names[i] + "@" + sign_name(signs[x]), {}, names[i] + "+", names[i] + "-");
    }
  for (VertexId x = 0; x < signs.size(); ++x)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto a = up.find({x, i}), c = up.find({x, j});
        if (a == up.end() || c == up.end()) continue;
        auto xi = b.view().terminus(a->second), xj = b.view().terminus(c->second);
        auto d = up.find({xi, j}), e = up.find({xj, i});
        if (d == up.end() || e == up.end()) continue;
        b.add_square({a->second, d->second, e->second ^ 1u, c->second ^ 1u});
      }
  b.flag_fill();
  return b;
}

}  // namespace

std::string label_letter(const std::string& label) {
  if (label.empty() || (label.back() != '+' && label.back() != '-')) return label;
  return label.substr(0, label.size() - 1);
}

CubeComplex build_e_complex(const CubeComplex& q, const DividingPattern& p, bool full_cube) {
  auto s = sides_of(q, p);
  auto signs = sign_vectors(s, full_cube);
  if (signs.empty()) throw PreconditionError("dividing pattern has no consistent sign vector");
  return e_builder(signs, partition_names(p)).build();
}

HostBundle build_host(const CubeComplex& q, const DividingPattern& p, const HostOptions& opts) {
  HyperplaneStructure hs(q);
  const auto& col = p.colouring;
  auto report = validate_pattern(q, hs, p);
  if (!report.ok())
    throw PreconditionError("dividing pattern does not validate" +
                            (report.witnesses.empty() ? std::string() : ": " + report.witnesses.front().message));
  const std::size_t n = p.partitions.size(), nc = col.num_colours();
  auto names = partition_names(p);
  for (const auto& nm : names)
    if (col.graph.find(nm)) throw PreconditionError("partition " + nm + " shares its name with a colour");

  HostBundle out;
  out.base = with_colouring_labels(q, hs, col);
  out.pattern = p;
  out.options = opts;
  out.num_colours = nc;
  out.gamma_hat = extended_crossing_graph(hs, p);
  if (opts.full_cube)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) out.gamma_hat.add_edge(nc + i, nc + j);

  auto s = sides_of(q, p);
  auto signs = sign_vectors(s, opts.full_cube);
  if (signs.empty()) throw PreconditionError("dividing pattern has no consistent sign vector");
  auto b = e_builder(signs, names);
  out.e_complex = b.build();
  out.sign_vectors.resize(signs.size());
  for (std::size_t x = 0; x < signs.size(); ++x)
    for (char c : signs[x]) out.sign_vectors[x].push_back(c == '+' ? 1 : -1);

  // Colour edges.
  std::vector<std::array<VertexSet, 2>> half(nc);  // [v][0] = C(v-), [v][1] = C(v+)
  std::vector<std::vector<char>> in_zero(nc, std::vector<char>(n, 0));
  for (std::size_t v = 0; v < nc; ++v) {
    half[v][0] = generalised_half_carrier(hs, col, v, false);
    half[v][1] = generalised_half_carrier(hs, col, v, true);
    auto fib = col.fibre(v);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& z = p.partitions[i].zero;
      in_zero[v][i] = !fib.empty() && std::binary_search(z.begin(), z.end(), fib.front());
    }
  }
  auto meets_all = [&](const VertexSet& c, const std::string& sg) {
    for (std::size_t i = 0; i < n; ++i)
      if (!c.intersects(s.side[i][sign_bit(sg[i])])) return false;
    return true;
  };
  for (VertexId x = 0; x < signs.size(); ++x)
    for (std::size_t v = 0; v < nc; ++v) {
      if (!meets_all(half[v][0], signs[x])) continue;
      auto y = signs[x];
      for (std::size_t i = 0; i < n; ++i)
        if (in_zero[v][i]) y[i] = y[i] == '+' ? '-' : '+';
      auto yid = b.view().find_vertex(sign_name(y));
      if (!yid) throw InternalConsistencyError("flipped sign vector " + sign_name(y) + " is not a vertex of E");
      if (!meets_all(half[v][1], y))
        throw InternalConsistencyError("C(" + col.graph.name(v) + "+) misses a side of " + sign_name(y));
      const auto& vn = col.graph.name(v);
      b.add_edge(x, *yid, vn + "@" + sign_name(signs[x]), {}, vn + "+", vn + "-");
    }
  // Every v- germ the rule asks for must now exist, and no other.
  for (VertexId y = 0; y < signs.size(); ++y)
    for (std::size_t v = 0; v < nc; ++v) {
      bool want = meets_all(half[v][1], signs[y]);
      bool have = b.view().dart_with_label(y, col.graph.name(v) + "-").has_value();
      if (want != have)
        throw InternalConsistencyError("germ " + col.graph.name(v) + "- at " + sign_name(signs[y]) +
                                       (want ? " missing" : " unexpected"));
    }

  // Cubes.
  const auto& gh = out.gamma_hat;
  auto letter_label = [&](std::size_t letter, bool plus) { return gh.name(letter) + (plus ? "+" : "-"); };
  auto cliques = all_cliques(gh, 2, opts.squares_then_fill ? 2 : gh.order());
  for (VertexId x = 0; x < signs.size(); ++x) {
    std::vector<std::array<bool, 2>> present(gh.order());
    for (std::size_t l = 0; l < gh.order(); ++l)
      for (int sg = 0; sg < 2; ++sg) present[l][sg] = b.view().dart_with_label(x, letter_label(l, sg == 1)).has_value();
    for (const auto& k : cliques) {
      if (!std::all_of(k.begin(), k.end(), [&](std::size_t l) { return present[l][0] || present[l][1]; })) continue;
      const std::size_t m = k.size();
      for (std::size_t choice = 0; choice < (std::size_t{1} << m); ++choice) {
        bool skip = false;
        for (std::size_t a = 0; a < m; ++a)
          if (!present[k[a]][(choice >> a) & 1u]) skip = true;
        if (skip) continue;
        auto f = detail::walk_frame(b.view(), x, static_cast<int>(m), [&](VertexId at, int a, bool upward) {
          bool plus = ((choice >> a) & 1u) != 0;
          if (!upward) plus = !plus;
          auto d = b.view().dart_with_label(at, letter_label(k[a], plus));
          return d ? *d : kNone;
        });
        if (!f) throw InternalConsistencyError("clique cube at " + sign_name(signs[x]) + " does not close up");
        b.add_cube(*f);
      }
    }
  }
  if (opts.squares_then_fill) b.flag_fill();
  out.host = b.build();

  // j: Q -> M
  std::vector<VertexId> vmap(q.num_vertices());
  for (VertexId x = 0; x < q.num_vertices(); ++x) {
    std::string sg;
    for (std::size_t i = 0; i < n; ++i) {
      if (s.side[i][1].contains(x))
        sg += '+';
      else if (s.side[i][0].contains(x))
        sg += '-';
      else
        throw PreconditionError("vertex " + q.vertex_name(x) + " lies in neither side of " + names[i]);
    }
    auto v = out.host.find_vertex(sign_name(sg));
    if (!v) throw InternalConsistencyError("sign vector of " + q.vertex_name(x) + " is not a vertex of E");
    vmap[x] = *v;
  }
  std::vector<DartId> dmap(q.num_darts());
  for (DartId d = 0; d < q.num_darts(); ++d) {
    auto m = out.host.dart_with_label(vmap[q.origin(d)], *out.base.label(d));
    if (!m) throw InternalConsistencyError("no host edge for dart " + q.dart_name(d));
    dmap[d] = *m;
  }
  try {
    out.embedding_j = make_cubical_map(out.base, out.host, std::move(vmap), std::move(dmap));
  } catch (const PreconditionError& e) {
    throw InternalConsistencyError(std::string("embedding of Q does not extend: ") + e.what());
  }
  return out;
}

std::string check_salvetti_structure(const CubeComplex& c, const SimplicialGraph& g) {
  if (c.num_vertices() != 1) return std::to_string(c.num_vertices()) + " vertices";
  std::set<std::string> seen;
  for (DartId d = 0; d < c.num_darts(); d += 2) {
    const auto& a = c.label(d);
    const auto& r = c.label(d + 1);
    if (!a || !r) return "unlabelled edge " + c.dart_name(d);
    if (label_letter(*a) != label_letter(*r) || a->back() == r->back())
      return "edge " + c.dart_name(d) + " has germs " + *a + ", " + *r;
    auto l = label_letter(*a);
    if (!g.find(l)) return "edge letter " + l + " not in the graph";
    if (!seen.insert(l).second) return "two edges labelled " + l;
  }
  if (seen.size() != g.order()) return std::to_string(seen.size()) + " edges for " + std::to_string(g.order()) + " letters";
  for (int k = 2; k <= std::max<int>(c.dimension(), 2); ++k) {
    auto want = all_cliques(g, k, k).size();
    std::set<std::vector<std::size_t>> cells;
    if (k <= c.dimension())
      for (const auto& f : c.cubes(k)) {
        std::vector<std::size_t> ls;
        for (int i = 0; i < k; ++i) ls.push_back(g.index(label_letter(*c.label(f.away(0, i)))));
        std::sort(ls.begin(), ls.end());
        for (std::size_t i = 0; i < ls.size(); ++i)
          for (std::size_t j = i + 1; j < ls.size(); ++j)
            if (!g.adjacent(ls[i], ls[j])) return "cube on non-clique";
        if (!cells.insert(ls).second) return "two " + std::to_string(k) + "-cubes on one clique";
      }
    if (cells.size() != want)
      return std::to_string(cells.size()) + " " + std::to_string(k) + "-cubes for " + std::to_string(want) + " cliques";
  }
  if (!all_cliques(g, c.dimension() + 1, c.dimension() + 1).empty() && c.dimension() >= 1)
    return "missing cubes above dimension " + std::to_string(c.dimension());
  return {};
}

HostReport verify_host(const HostBundle& b) {
  HostReport r;
  const auto& m = b.host;
  HyperplaneStructure hs(m);
  auto sp = is_special(m, hs);
  r.special = sp.special;
  if (!r.special) r.messages.push_back("(i) " + sp.describe(m, hs));

  // (ii)
  std::vector<std::size_t> letter(hs.size(), kNone);
  r.crossing_graph = true;
  for (HyperplaneId h = 0; h < hs.size() && r.crossing_graph; ++h)
    for (auto e : hs[h].edges) {
      const auto& l = m.label(2 * e);
      auto idx = l ? b.gamma_hat.find(label_letter(*l)) : std::nullopt;
      if (!idx || (letter[h] != kNone && letter[h] != *idx)) {
        r.crossing_graph = false;
        r.messages.push_back("(ii) hyperplane " + hs[h].name + " carries mixed or unknown labels");
        break;
      }
      letter[h] = *idx;
    }
  if (r.crossing_graph) {
    std::set<std::size_t> distinct(letter.begin(), letter.end());
    if (distinct.size() != hs.size() || hs.size() != b.gamma_hat.order()) {
      r.crossing_graph = false;
      r.messages.push_back("(ii) " + std::to_string(hs.size()) + " hyperplanes for " +
                           std::to_string(b.gamma_hat.order()) + " letters");
    } else {
      SimplicialGraph g(b.gamma_hat.names());
      for (auto [h, k] : hs.crossings()) g.add_edge(letter[h], letter[k]);
      if (!g.same_as(b.gamma_hat)) {
        r.crossing_graph = false;
        r.messages.push_back("(ii) crossing graph differs from the extended crossing graph");
      }
    }
  }

  // (iii)
  std::vector<HyperplaneId> drop;
  for (HyperplaneId h = 0; h < hs.size(); ++h) {
    auto l = label_letter(*m.label(2 * hs[h].edges.front()));
    auto idx = b.gamma_hat.find(l);
    if (idx && *idx >= b.num_colours) drop.push_back(h);
  }
  try {
    auto col = collapse(m, drop);
    auto why = check_salvetti_structure(col.complex, b.pattern.colouring.graph);
    r.salvetti = why.empty();
    if (!r.salvetti) r.messages.push_back("(iii) " + why);
  } catch (const Error& e) {
    r.messages.push_back(std::string("(iii) ") + e.what());
  }

  // (iv), (v)
  const auto& j = b.embedding_j;
  r.injective = is_injective(j);
  if (!r.injective) r.messages.push_back("j is not injective");
  std::string why;
  r.locally_convex = locally_convex_image(m, j, &why);
  if (!r.locally_convex) r.messages.push_back("(iv) " + why);
  std::vector<char> in_v(m.num_vertices(), 0), in_d(m.num_darts(), 0);
  for (auto v : j.vertex_map) in_v[v] = 1;
  for (auto d : j.dart_map) in_d[d] = 1;
  r.colour_edges_in_q = true;
  for (VertexId v = 0; v < m.num_vertices(); ++v) {
    if (!in_v[v]) continue;
    for (auto d : m.darts_at(v)) {
      auto idx = b.gamma_hat.find(label_letter(*m.label(d)));
      if (idx && *idx < b.num_colours && !in_d[d]) {
        r.colour_edges_in_q = false;
        r.messages.push_back("(v) colour dart " + m.dart_name(d) + " at " + m.vertex_name(v) + " is outside j(Q)");
      }
    }
  }
  return r;
}

SimplicialGraph extended_graph(const SimplicialGraph& gh, std::size_t partitions, std::size_t n) {
  const std::size_t nc = gh.order() - partitions;
  SimplicialGraph g;
  for (std::size_t v = 0; v < nc; ++v) g.add_vertex(gh.name(v));
  for (std::size_t i = 0; i < partitions; ++i)
    for (std::size_t s = 1; s <= n; ++s) g.add_vertex(gh.name(nc + i) + "^" + std::to_string(s));
  auto id = [&](std::size_t i, std::size_t s) { return nc + i * n + (s - 1); };
  for (auto [a, c] : gh.edges()) {
    if (a < nc && c < nc) {
      g.add_edge(a, c);
    } else if (a < nc || c < nc) {
      auto v = std::min(a, c), h = std::max(a, c) - nc;
      for (std::size_t s = 1; s <= n; ++s) g.add_edge(v, id(h, s));
    } else {
      for (std::size_t s = 1; s <= n; ++s)
        for (std::size_t t = 1; t <= n; ++t) g.add_edge(id(a - nc, s), id(c - nc, t));
    }
  }
  return g;
}

HostBundle build_extended_host(HostBundle b, std::size_t n) {
  if (n < 2) throw PreconditionError("extended host needs N >= 2");
  const auto& m = b.host;
  auto is_e = [&](DartId d) {
    auto idx = b.gamma_hat.find(label_letter(*m.label(d)));
    return idx && *idx >= b.num_colours;
  };
  ComplexBuilder eb;
  for (VertexId v = 0; v < m.num_vertices(); ++v) eb.add_vertex(m.vertex_name(v));
  // copy[d * n + s - 1]
  std::vector<DartId> copy(m.num_darts() * n, kNone);
  std::vector<std::size_t> index_of;  // per new dart: copy index, 0 for colour darts
  std::vector<DartId> source_of;
  for (DartId d = 0; d < m.num_darts(); d += 2) {
    if (!is_e(d)) {
      auto nd = eb.add_edge(m.origin(d), m.terminus(d), m.dart_name(d), m.dart_name(d + 1), m.label(d), m.label(d + 1));
      for (std::size_t s = 0; s < n; ++s) {
        copy[d * n + s] = nd;
        copy[(d + 1) * n + s] = nd + 1;
      }
      index_of.insert(index_of.end(), {0, 0});
      source_of.insert(source_of.end(), {d, d + 1});
      continue;
    }
    for (std::size_t s = 1; s <= n; ++s) {
      auto suf = "^" + std::to_string(s);
      auto l = label_letter(*m.label(d));
      auto nd = eb.add_edge(m.origin(d), m.terminus(d), m.dart_name(d) + suf, m.dart_name(d + 1) + suf, l + suf + "+",
                            l + suf + "-");
      copy[d * n + s - 1] = nd;
      copy[(d + 1) * n + s - 1] = nd + 1;
      index_of.insert(index_of.end(), {s, s});
      source_of.insert(source_of.end(), {d, d + 1});
    }
  }
  for (int k = 2; k <= m.dimension(); ++k)
    for (const auto& f : m.cubes(k)) {
      std::vector<int> e_axes;
      for (int a = 0; a < k; ++a)
        if (is_e(f.away(0, a))) e_axes.push_back(a);
      std::vector<std::size_t> idx(k, 1);
      std::size_t total = 1;
      for (std::size_t i = 0; i < e_axes.size(); ++i) total *= n;
      for (std::size_t t = 0; t < total; ++t) {
        std::size_t r = t;
        for (auto a : e_axes) {
          idx[a] = r % n + 1;
          r /= n;
        }
        std::vector<DartId> away(f.away_darts().size());
        for (std::size_t c = 0; c < f.num_corners(); ++c)
          for (int a = 0; a < k; ++a) away[c * k + a] = copy[f.away(c, a) * n + idx[a] - 1];
        eb.add_cube(CubeFrame(k, f.corners(), std::move(away)));
      }
    }
  ExtendedHost ex;
  ex.n = n;
  ex.complex = eb.build();
  ex.graph = extended_graph(b.gamma_hat, b.gamma_hat.order() - b.num_colours, n);
  std::vector<VertexId> vm(m.num_vertices());
  for (VertexId v = 0; v < vm.size(); ++v) vm[v] = v;
  std::vector<DartId> dm(ex.complex.num_darts());
  for (DartId d = 0; d < dm.size(); ++d)
    dm[d] = index_of[d] == 0 ? d : copy[source_of[d] * n + index_of[d] % n];
  ex.phi = CubicalAutomorphism(ex.complex, std::move(vm), std::move(dm));
  b.extended = std::move(ex);
  return b;
}

CubicalAutomorphism host_automorphism(const HostBundle& b) {
  if (!b.extended) throw PreconditionError("bundle has no extended host");
  return b.extended->phi;
}

}  // namespace cubecx
