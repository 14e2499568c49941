#include <gtest/gtest.h>

#include <set>

#include "cubecx/collapse.hpp"
#include "cubecx/generators.hpp"
#include "cubecx/host.hpp"
#include "cubecx/isomorphism.hpp"
#include "cubecx/topology.hpp"
#include "small_complexes.hpp"

using namespace cubecx;
using namespace cubecx::testing;

namespace {

DividingPattern single_partition(const CubeComplex& c) {
  // Lone square: cut along the hyperplane dual to "ab".
  HyperplaneStructure hs(c);
  DividingPattern p;
  p.colouring = standard_colouring(c, hs);
  auto h = *hs.find(c, "ab");
  Tripartition t{"P", {h}, VertexSet(c.num_vertices()), VertexSet(c.num_vertices())};
  auto comp = components_without(c, hs, {h});
  for (VertexId v = 0; v < c.num_vertices(); ++v) (comp[v] == comp[0] ? t.minus : t.plus).insert(v);
  p.partitions.push_back(t);
  return p;
}

}  // namespace

TEST(Host, EComplexShapes) {
  auto sq = lone_square();
  auto one = build_e_complex(sq, single_partition(sq));
  EXPECT_EQ(one.num_vertices(), 2u);
  EXPECT_EQ(one.num_edges(), 1u);

  auto uc = configuration_space(graphs::cycle(5), 2);
  auto e = build_e_complex(uc.complex, uc.pattern);
  EXPECT_EQ(e.num_vertices(), 32u);
  EXPECT_EQ(e.num_cells(5), 1u);
  EXPECT_TRUE(is_median_graph(e).median);
  EXPECT_TRUE(is_npc(e).npc);

  auto g2 = fixture("genus2");
  auto es = build_e_complex(g2.complex, *g2.pattern);
  EXPECT_EQ(es.num_vertices(), 4u);
  EXPECT_EQ(es.num_cells(2), 1u);
}

TEST(Host, DegeneratePatternThrows) {
  auto sq = lone_square();
  auto p = single_partition(sq);
  p.partitions[0].minus = VertexSet(sq.num_vertices());
  p.partitions[0].plus = VertexSet(sq.num_vertices());
  EXPECT_THROW(build_e_complex(sq, p), PreconditionError);
}

TEST(Host, DromsAnticlique) {
  auto pc = droms(graphs::anticlique(2));
  auto b = build_host(pc.complex, pc.pattern);
  EXPECT_EQ(b.host.num_vertices(), 4u);
  EXPECT_EQ(b.host.num_vertices(), b.e_complex.num_vertices());
  auto r = verify_host(b);
  EXPECT_TRUE(r.ok()) << (r.messages.empty() ? "" : r.messages[0]);
  EXPECT_TRUE(graphs_isomorphic(crossing_graph(b.host), b.gamma_hat));
  // Γ̂: colours 0,1 non-adjacent, H0-H1 adjacent, [v, Hw] for v != w.
  const auto& g = b.gamma_hat;
  EXPECT_FALSE(g.adjacent(g.index("0"), g.index("1")));
  EXPECT_TRUE(g.adjacent(g.index("H0"), g.index("H1")));
  EXPECT_TRUE(g.adjacent(g.index("0"), g.index("H1")));
  EXPECT_FALSE(g.adjacent(g.index("0"), g.index("H0")));
}

TEST(Host, AllFivePropertiesOnCorpus) {
  std::vector<std::pair<std::string, PatternedComplex>> cases;
  for (auto g : {graphs::edge(), graphs::anticlique(2), graphs::path(3)}) cases.push_back({"droms", droms(g)});
  cases.push_back({"uc2c5", configuration_space(graphs::cycle(5), 2)});
  auto g2 = fixture("genus2");
  cases.push_back({"genus2", {g2.complex, *g2.pattern}});
  for (const auto& [name, pc] : cases) {
    auto b = build_host(pc.complex, pc.pattern);
    auto r = verify_host(b);
    EXPECT_TRUE(r.ok()) << name << ": " << (r.messages.empty() ? "" : r.messages[0]);
    EXPECT_EQ(b.sign_vectors.size(), b.host.num_vertices());
    HostOptions o;
    o.squares_then_fill = true;
    auto b2 = build_host(pc.complex, pc.pattern, o);
    EXPECT_TRUE(is_isomorphic(b.host, b2.host, true).has_value()) << name;
  }
}

TEST(Host, Genus2CrossingGraph) {
  auto fx = fixture("genus2");
  auto b = build_host(fx.complex, *fx.pattern);
  HyperplaneStructure hs(fx.complex);
  auto want = extended_crossing_graph(hs, *fx.pattern);
  EXPECT_TRUE(graphs_isomorphic(crossing_graph(b.host), want));
  EXPECT_TRUE(b.gamma_hat.same_as(want));
}

TEST(Host, NonEEdgesCrossColours) {
  auto uc = configuration_space(graphs::cycle(5), 2);
  auto b = build_host(uc.complex, uc.pattern);
  std::size_t e_edges = 0;
  for (DartId d = 0; d < b.host.num_darts(); d += 2) {
    auto idx = b.gamma_hat.index(label_letter(*b.host.label(d)));
    if (idx >= b.num_colours) ++e_edges;
  }
  EXPECT_EQ(e_edges, b.e_complex.num_edges());
}

namespace {

// Remove the edges through dart ids in `victims` and every square using them.
CubeComplex without_edges(const CubeComplex& c, const std::set<std::string>& victims) {
  auto raw = to_raw(c);
  std::set<std::string> gone = victims;
  for (const auto& d : raw.darts)
    if (victims.count(d.id)) gone.insert(d.reverse);
  std::erase_if(raw.darts, [&](const RawDart& d) { return gone.count(d.id) > 0; });
  std::erase_if(raw.squares, [&](const auto& s) {
    return std::any_of(s.begin(), s.end(), [&](const std::string& x) { return gone.count(x) > 0; });
  });
  return from_raw(raw);
}

}  // namespace

TEST(Host, DeletedColourEdgeIsCaught) {
  auto pc = droms(graphs::anticlique(2));
  auto b = build_host(pc.complex, pc.pattern);
  ASSERT_TRUE(verify_host(b).ok());
  std::set<std::string> all_zero;
  std::string victim;
  for (DartId d = 0; d < b.host.num_darts(); d += 2)
    if (label_letter(*b.host.label(d)) == "0") {
      all_zero.insert(b.host.dart_name(d));
      if (victim.empty()) victim = b.host.dart_name(d);
    }
  ASSERT_EQ(all_zero.size(), 2u);

  // One colour edge: its parallel copy across H1 still collapses onto the
  // colour-0 loop, so (iii) survives; the crossing graph loses [0, H1].
  auto one = b;
  one.host = without_edges(b.host, {victim});
  auto r1 = verify_host(one);
  EXPECT_FALSE(r1.ok());
  EXPECT_FALSE(r1.crossing_graph);
  EXPECT_TRUE(r1.salvetti);

  // Every edge of colour 0: the collapse has no edge for that letter.
  auto all = b;
  all.host = without_edges(b.host, all_zero);
  auto r2 = verify_host(all);
  EXPECT_FALSE(r2.salvetti);
  EXPECT_FALSE(r2.ok());
}

TEST(Host, ExtendedHostGraphs) {
  auto fx = fixture("genus2");
  auto b = build_extended_host(build_host(fx.complex, *fx.pattern), 2);
  ASSERT_TRUE(b.extended);
  const auto& ex = *b.extended;
  EXPECT_EQ(ex.graph.order(), 10u);
  EXPECT_EQ(ex.complex.num_vertices(), b.host.num_vertices());
  EXPECT_TRUE(graphs_isomorphic(crossing_graph(ex.complex), ex.graph));
  // Collapse H^1 hyperplanes: Salvetti complex of Γ̂_1 ≅ Γ̂.
  HyperplaneStructure hs(ex.complex);
  std::vector<HyperplaneId> drop;
  std::vector<std::size_t> keep;
  for (HyperplaneId h = 0; h < hs.size(); ++h) {
    auto l = label_letter(*ex.complex.label(2 * hs[h].edges.front()));
    if (l.size() > 2 && l.substr(l.size() - 2) == "^1") drop.push_back(h);
  }
  for (std::size_t v = 0; v < ex.graph.order(); ++v) {
    const auto& l = ex.graph.name(v);
    if (!(l.size() > 2 && l.substr(l.size() - 2) == "^1")) keep.push_back(v);
  }
  auto col = collapse(ex.complex, drop);
  EXPECT_EQ(check_salvetti_structure(col.complex, ex.graph.induced(keep)), "");
  EXPECT_TRUE(graphs_isomorphic(ex.graph.induced(keep), b.gamma_hat));
}

TEST(Host, ExtendedDromsCollapse) {
  auto pc = droms(graphs::path(3));
  auto b = build_extended_host(build_host(pc.complex, pc.pattern), 3);
  const auto& ex = *b.extended;
  HyperplaneStructure hs(ex.complex);
  std::vector<HyperplaneId> drop;
  std::vector<std::size_t> keep;
  for (HyperplaneId h = 0; h < hs.size(); ++h) {
    auto l = label_letter(*ex.complex.label(2 * hs[h].edges.front()));
    if (l.ends_with("^1")) drop.push_back(h);
  }
  for (std::size_t v = 0; v < ex.graph.order(); ++v)
    if (!ex.graph.name(v).ends_with("^1")) keep.push_back(v);
  auto col = collapse(ex.complex, drop);
  EXPECT_EQ(check_salvetti_structure(col.complex, ex.graph.induced(keep)), "");
  EXPECT_TRUE(graphs_isomorphic(ex.graph.induced(keep), extended_graph(b.gamma_hat, 3, 2)));
  EXPECT_TRUE(is_special(ex.complex).special);
  EXPECT_TRUE(is_npc(ex.complex).npc);
}

TEST(Host, ThetaGraphCopies) {
  auto sq = lone_square();
  HyperplaneStructure hs(sq);
  auto p = strong_pattern(sq, hs);
  ASSERT_TRUE(p);
  EXPECT_THROW(build_host(sq, single_partition(sq)), PreconditionError);
  auto b = build_extended_host(build_host(sq, *p), 3);
  const auto& ex = b.extended->complex;
  std::size_t copies = 0;
  for (DartId d = 0; d < ex.num_darts(); d += 2)
    if (ex.label(d)->starts_with("H") && ex.label(d)->find('^') != std::string::npos) ++copies;
  EXPECT_EQ(copies, 3u * b.e_complex.num_edges());
  EXPECT_EQ(ex.num_vertices(), b.host.num_vertices());
}

TEST(Host, Automorphism) {
  auto fx = fixture("genus2");
  auto base = build_host(fx.complex, *fx.pattern);
  EXPECT_THROW(host_automorphism(base), PreconditionError);
  EXPECT_THROW(build_extended_host(base, 1), PreconditionError);
  for (std::size_t n : {2u, 3u}) {
    auto b = build_extended_host(base, n);
    auto phi = host_automorphism(b);
    EXPECT_EQ(phi.order(), n);
    EXPECT_FALSE(phi.is_identity());
    const auto& ex = b.extended->complex;
    for (VertexId v = 0; v < ex.num_vertices(); ++v) EXPECT_EQ(phi.vertex(v), v);
    for (DartId d = 0; d < ex.num_darts(); ++d) {
      auto l = label_letter(*ex.label(d));
      if (b.gamma_hat.find(l)) {
        EXPECT_EQ(phi.dart(d), d);
      } else {
        // same partition, next copy index
        auto img = label_letter(*ex.label(phi.dart(d)));
        EXPECT_EQ(img.substr(0, img.find('^')), l.substr(0, l.find('^')));
        EXPECT_EQ(ex.label(d)->back(), ex.label(phi.dart(d))->back());
      }
    }
  }
}
