#include "cubecx/completion.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "cubecx/fixpoints.hpp"
#include "cubecx/generators.hpp"
#include "cubecx/topology.hpp"

namespace cubecx {

namespace {

using GermTable = std::vector<std::map<std::string, DartId>>;

GermTable germ_table(const CubeComplex& c) {
  GermTable g(c.num_vertices());
  for (DartId d = 0; d < c.num_darts(); ++d) {
    const auto& l = c.label(d);
    if (!l) throw InternalConsistencyError("unlabelled germ " + c.dart_name(d));
    if (!g[c.origin(d)].emplace(*l, d).second)
      throw InternalConsistencyError("two germs labelled " + *l + " at " + c.vertex_name(c.origin(d)));
  }
  return g;
}

DartId germ(const GermTable& g, const CubeComplex& c, VertexId v, const std::string& label) {
  auto it = g[v].find(label);
  if (it == g[v].end()) throw InternalConsistencyError("no germ " + label + " at " + c.vertex_name(v));
  return it->second;
}

std::string idx(const std::string& h, int i) { return h + "." + std::to_string(i); }

CubeComplex relabel(const CubeComplex& c, const std::vector<std::string>& labels) {
  ComplexBuilder b(c);
  for (DartId d = 0; d < c.num_darts(); ++d) b.set_label(d, labels[d]);
  return b.build();
}

CubicalMap identity_into(const CubeComplex& base, const CubeComplex& big) {
  std::vector<VertexId> vm(base.num_vertices());
  std::vector<DartId> dm(base.num_darts());
  for (VertexId v = 0; v < vm.size(); ++v) vm[v] = v;
  for (DartId d = 0; d < dm.size(); ++d) dm[d] = d;
  return make_cubical_map(base, big, std::move(vm), std::move(dm));
}

void set_pair(std::vector<DartId>& dm, DartId from, DartId to) {
  dm[from] = to;
  dm[from ^ 1u] = to ^ 1u;
}

}  // namespace

CompletionBundle canonical_completion(const CubeComplex& q) {
  HyperplaneStructure hs(q);
  auto sp = is_special(q, hs);
  if (!sp.special) throw PreconditionError("canonical completion needs a special complex: " + sp.describe(q, hs));
  const std::size_t nv = q.num_vertices(), nh = hs.size();

  std::vector<std::string> labels(q.num_darts());
  std::vector<std::vector<DartId>> pos(nv, std::vector<DartId>(nh, kNone)), neg = pos;
  for (DartId d = 0; d < q.num_darts(); ++d) {
    auto h = hs.of_dart(d);
    labels[d] = idx(hs[h].name, 1) + (hs.sign(d) > 0 ? "+" : "-");
    auto& slot = (hs.sign(d) > 0 ? pos : neg)[q.origin(d)][h];
    if (slot != kNone) throw PreconditionError("hyperplane " + hs[h].name + " self-osculates directly at " + q.vertex_name(q.origin(d)));
    slot = d;
  }

  CompletionBundle out;
  out.base = relabel(q, labels);
  out.gamma = crossing_graph(hs);
  ComplexBuilder b(out.base);

  // H^+·x for every hyperplane and vertex; three H_i-edges run x -> succ.
  for (HyperplaneId h = 0; h < nh; ++h)
    for (VertexId x = 0; x < nv; ++x) {
      VertexId y = x;
      int first = 1;
      if (pos[x][h] != kNone) {
        y = q.terminus(pos[x][h]);
        first = 2;
      } else if (neg[x][h] != kNone) {
        // case (3): walk back across H until no H- germ is left
        std::size_t steps = 0;
        while (neg[y][h] != kNone) {
          y = q.terminus(neg[y][h]);
          if (++steps > nv) throw InternalConsistencyError("maximal path across " + hs[h].name + " from " + q.vertex_name(x) + " does not end");
        }
      }
      for (int i = first; i <= 3; ++i) {
        auto name = idx(hs[h].name, i) + "@" + q.vertex_name(x);
        b.add_edge(x, y, name, name + "~", idx(hs[h].name, i) + "+", idx(hs[h].name, i) + "-");
      }
    }

  auto g = germ_table(b.view());
  const auto& v1 = b.view();
  auto flip = [](char s) { return s == '+' ? '-' : '+'; };
  for (VertexId x = 0; x < nv; ++x)
    for (auto [h, k] : hs.crossings())
      for (char eh : {'+', '-'})
        for (char ek : {'+', '-'})
          for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
              auto hi = idx(hs[h].name, i), kj = idx(hs[k].name, j);
              DartId d1 = germ(g, v1, x, hi + eh);
              DartId d2 = germ(g, v1, v1.terminus(d1), kj + ek);
              DartId d3 = germ(g, v1, v1.terminus(d2), hi + flip(eh));
              DartId d4 = germ(g, v1, v1.terminus(d3), kj + flip(ek));
              if (v1.terminus(d4) != x || germ(g, v1, x, kj + ek) != (d4 ^ 1u))
                throw InternalConsistencyError(hi + "/" + kj + " square at " + q.vertex_name(x) + " does not close");
              b.add_square({d1, d2, d3, d4});
            }
  b.flag_fill();
  out.completed = b.build();
  out.inclusion = identity_into(out.base, out.completed);

  std::vector<VertexId> vm(nv);
  for (VertexId v = 0; v < nv; ++v) vm[v] = v;
  std::vector<DartId> dm(out.completed.num_darts());
  for (DartId d = 0; d < dm.size(); ++d) dm[d] = d;
  auto gc = germ_table(out.completed);
  for (HyperplaneId h = 0; h < nh; ++h)
    for (VertexId x = 0; x < nv; ++x) {
      DartId e[3];
      for (int i = 0; i < 3; ++i) e[i] = germ(gc, out.completed, x, idx(hs[h].name, i + 1) + "+");
      if (e[0] < q.num_darts()) {
        set_pair(dm, e[1], e[2]);
        set_pair(dm, e[2], e[1]);
      } else {
        set_pair(dm, e[0], e[1]);
        set_pair(dm, e[1], e[2]);
        set_pair(dm, e[2], e[0]);
      }
    }
  out.phi = CubicalAutomorphism(out.completed, vm, dm);

  out.salvetti_target = half_octahedralisation(out.gamma, 3);
  out.salvetti = salvetti(out.salvetti_target);
  std::vector<VertexId> cv(nv, 0);
  std::vector<DartId> cd(out.completed.num_darts());
  for (DartId d = 0; d < cd.size(); ++d) {
    auto t = out.salvetti->dart_with_label(0, *out.completed.label(d));
    if (!t) throw InternalConsistencyError("label " + *out.completed.label(d) + " missing from the Salvetti target");
    cd[d] = *t;
  }
  out.covering = make_cubical_map(out.completed, *out.salvetti, std::move(cv), std::move(cd));
  out.degree = nv;
  return out;
}

CompletionBundle canonical_completion_racg(const CubeComplex& q, const std::vector<HyperplaneId>& s) {
  HyperplaneStructure hs(q);
  auto sp = is_special(q, hs);
  if (!sp.special) throw PreconditionError("canonical completion needs a special complex: " + sp.describe(q, hs));
  if (!sp.indirect_self_osculations.empty()) {
    const auto& o = sp.indirect_self_osculations.front();
    throw PreconditionError("hyperplane " + hs[o.h].name + " self-osculates indirectly at " + q.vertex_name(o.at) +
                            "; pass to a finer cover first");
  }
  const std::size_t nh = hs.size();
  auto dc = double_cover(q, s);

  CompletionBundle out;
  out.racg = true;
  out.gamma = crossing_graph(hs);
  if (!dc.connected) out.warnings.push_back("double cover is disconnected");
  const auto& q2 = dc.complex;
  std::vector<std::string> labels(q2.num_darts());
  for (DartId d = 0; d < q2.num_darts(); ++d) labels[d] = idx(hs[hs.of_dart(dc.projection.dart_map[d])].name, 1);
  out.base = relabel(q2, labels);
  ComplexBuilder b(out.base);

  // case (1): no H-edge at x, three edges between the two lifts
  std::vector<std::vector<char>> has(q.num_vertices(), std::vector<char>(nh, 0));
  for (DartId d = 0; d < q.num_darts(); ++d) has[q.origin(d)][hs.of_dart(d)] = 1;
  std::vector<std::array<DartId, 3>> triples;
  for (VertexId x = 0; x < q.num_vertices(); ++x)
    for (HyperplaneId h = 0; h < nh; ++h) {
      if (has[x][h]) continue;
      std::array<DartId, 3> t{};
      for (int i = 1; i <= 3; ++i) {
        auto name = idx(hs[h].name, i) + "@" + q.vertex_name(x);
        t[i - 1] = b.add_edge(2 * x, 2 * x + 1, name, name + "~", idx(hs[h].name, i), idx(hs[h].name, i));
      }
      triples.push_back(t);
    }
  // case (2): two parallel copies of every lifted edge
  std::vector<std::array<DartId, 2>> pairs;
  for (DartId d = 0; d < q2.num_darts(); d += 2) {
    auto h = hs[hs.of_dart(dc.projection.dart_map[d])].name;
    std::array<DartId, 2> p{};
    for (int i = 2; i <= 3; ++i) {
      auto name = idx(h, i) + "@" + q2.dart_name(d);
      p[i - 2] = b.add_edge(q2.origin(d), q2.terminus(d), name, name + "~", idx(h, i), idx(h, i));
    }
    pairs.push_back(p);
  }

  auto g = germ_table(b.view());
  const auto& v1 = b.view();
  for (VertexId x = 0; x < q2.num_vertices(); ++x)
    for (auto [h, k] : hs.crossings())
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
          auto hi = idx(hs[h].name, i), kj = idx(hs[k].name, j);
          DartId d1 = germ(g, v1, x, hi);
          DartId d2 = germ(g, v1, v1.terminus(d1), kj);
          DartId d3 = germ(g, v1, v1.terminus(d2), hi);
          DartId d4 = germ(g, v1, v1.terminus(d3), kj);
          if (v1.terminus(d4) != x || germ(g, v1, x, kj) != (d4 ^ 1u))
            throw InternalConsistencyError(hi + "/" + kj + " square at " + q2.vertex_name(x) + " does not close");
          b.add_square({d1, d2, d3, d4});
        }
  b.flag_fill();
  out.completed = b.build();
  out.inclusion = identity_into(out.base, out.completed);

  std::vector<VertexId> vm(q2.num_vertices());
  for (VertexId v = 0; v < vm.size(); ++v) vm[v] = v;
  std::vector<DartId> dm(out.completed.num_darts());
  for (DartId d = 0; d < dm.size(); ++d) dm[d] = d;
  for (const auto& t : triples) {
    set_pair(dm, t[0], t[1]);
    set_pair(dm, t[1], t[2]);
    set_pair(dm, t[2], t[0]);
  }
  for (const auto& p : pairs) {
    set_pair(dm, p[0], p[1]);
    set_pair(dm, p[1], p[0]);
  }
  out.phi = CubicalAutomorphism(out.completed, vm, dm);
  out.salvetti_target = half_octahedralisation(out.gamma, 3);
  out.degree = q2.num_vertices();
  return out;
}

VertexId act(const CompletionBundle& b, const std::string& hyperplane, int sign, VertexId x) {
  if (b.racg) throw PreconditionError("H^±·x is defined for the RAAG completion only");
  auto d = b.completed.dart_with_label(x, idx(hyperplane, 1) + (sign > 0 ? "+" : "-"));
  if (!d) throw PreconditionError("no germ for hyperplane " + hyperplane + " at " + b.completed.vertex_name(x));
  return b.completed.terminus(*d);
}

CoveringReport check_covering(const CubeComplex& source, const CubeComplex& target, const CubicalMap& f) {
  CoveringReport r;
  for (VertexId v = 0; v < source.num_vertices(); ++v) {
    if (f.vertex_map[v] == 0) ++r.degree;
    auto ls = link(source, v);
    auto lt = link(target, f.vertex_map[v]);
    std::vector<DartId> germs;
    for (auto d : ls.germs) germs.push_back(f.dart_map[d]);
    std::sort(germs.begin(), germs.end());
    auto want = lt.germs;
    std::sort(want.begin(), want.end());
    if (germs != want) {
      r.covering = false;
      r.reason = "germs at " + source.vertex_name(v) + " do not map bijectively";
      return r;
    }
    std::multiset<std::vector<DartId>> got;
    for (const auto& s : ls.simplices) {
      std::vector<DartId> m;
      for (auto d : s) m.push_back(f.dart_map[d]);
      std::sort(m.begin(), m.end());
      got.insert(m);
    }
    std::multiset<std::vector<DartId>> need;
    for (auto s : lt.simplices) {
      std::sort(s.begin(), s.end());
      need.insert(s);
    }
    if (got != need) {
      r.covering = false;
      r.reason = "cube corners at " + source.vertex_name(v) + " do not map bijectively";
      return r;
    }
  }
  return r;
}

CompletionReport verify_completion(const CompletionBundle& b) {
  CompletionReport r;
  const auto& c = b.completed;
  HyperplaneStructure hs(c);
  auto sp = is_special(c, hs);
  auto npc = is_npc(c);
  r.special = sp.special && npc.npc;
  if (!sp.special) r.messages.push_back("completion is not special: " + sp.describe(c, hs));
  if (!npc.npc) r.messages.push_back("completion is not non-positively curved: " + npc.reason);

  auto want = b.racg ? b.salvetti_target : octahedralisation(b.gamma, 3);
  r.links = true;
  for (VertexId v = 0; v < c.num_vertices() && r.links; ++v) {
    auto l = link(c, v);
    std::set<std::string> seen;
    for (const auto& lab : l.labels)
      if (lab) seen.insert(*lab);
    if (seen.size() != l.germs.size() || !link_graph(c, v, true).same_as(want)) {
      r.links = false;
      r.messages.push_back("link at " + c.vertex_name(v) + " is not label-isomorphic to " + (b.racg ? "Γ[3/2]" : "Γ[3]"));
    }
  }

  std::string why;
  r.locally_convex = locally_convex_image(c, b.inclusion, &why);
  if (!r.locally_convex) r.messages.push_back("base is not locally convex: " + why);

  r.phi_order_value = b.phi.order();
  r.phi_order = b.phi.power(6).is_identity();
  if (!r.phi_order) r.messages.push_back("Φ has order " + std::to_string(r.phi_order_value));

  auto fs = fixed_set(c, {b.phi});
  std::set<EdgeId> base_edges;
  for (DartId d = 0; d < b.base.num_darts(); d += 2) base_edges.insert(b.inclusion.dart_map[d] >> 1);
  std::set<EdgeId> fixed_edges;
  bool cells_ok = fs.vertex_cells.size() == b.base.num_vertices();
  for (const auto& cell : fs.vertex_cells) cells_ok = cells_ok && cell.dim == 0;
  for (const auto& cell : fs.edge_cells) {
    cells_ok = cells_ok && cell.dim == 1;
    fixed_edges.insert(cell.id);
  }
  for (int k = 2; k <= std::max(b.base.dimension(), fs.complex.dimension()); ++k) {
    std::size_t have = fs.cube_cells.count(k) ? fs.cube_cells.at(k).size() : 0;
    cells_ok = cells_ok && have == b.base.num_cells(k);
  }
  r.fix_is_base = cells_ok && fixed_edges == base_edges;
  if (!r.fix_is_base) r.messages.push_back("Fix(Φ) differs from the base");

  r.degree = b.degree;
  if (b.covering && b.salvetti) {
    auto cov = check_covering(c, *b.salvetti, *b.covering);
    r.covering = cov.covering && cov.degree == c.num_vertices();
    if (!cov.covering) r.messages.push_back("not a covering: " + cov.reason);
  } else {
    // RACG side: the link profile stands in for the covering
    r.covering = r.links && b.degree == c.num_vertices();
  }
  return r;
}

}  // namespace cubecx
