#include <gtest/gtest.h>

#include <algorithm>

#include "cubecx/collapse.hpp"
#include "cubecx/hyperplanes.hpp"
#include "cubecx/isomorphism.hpp"
#include "cubecx/topology.hpp"
#include "small_complexes.hpp"

using namespace cubecx;
using namespace cubecx::testing;

namespace {

// Double cover of the one-vertex torus unwrapping both loops.
CubeComplex torus_cover() {
  ComplexBuilder b;
  auto x = b.add_vertex("x"), y = b.add_vertex("y");
  auto a1 = b.add_edge(x, y, "a1"), a2 = b.add_edge(y, x, "a2");
  auto b1 = b.add_edge(x, y, "b1"), b2 = b.add_edge(y, x, "b2");
  b.add_square({a1, b2, a2 ^ 1u, b1 ^ 1u});
  b.add_square({a2, b1, a1 ^ 1u, b2 ^ 1u});
  return b.build();
}

}  // namespace

TEST(Hyperplanes, LoneSquare) {
  auto c = lone_square();
  HyperplaneStructure hs(c);
  ASSERT_EQ(hs.size(), 2u);
  for (HyperplaneId h = 0; h < 2; ++h) {
    EXPECT_TRUE(hs.orientable(h));
    EXPECT_EQ(hs.orientations(h).size(), 2u);
    EXPECT_EQ(hs[h].edges.size(), 2u);
    EXPECT_TRUE(hs.is_carrier_retract(h));
  }
  EXPECT_TRUE(hs.crosses(0, 1));
  EXPECT_EQ(crossing_graph(c).size(), 1u);
}

TEST(Hyperplanes, NamesAndLookup) {
  auto c = lone_square();
  HyperplaneStructure hs(c);
  auto h = hs.find(c, "dc");
  ASSERT_TRUE(h);
  EXPECT_EQ(hs[*h].name, "ab");
  EXPECT_EQ(hs.find(c, "ab"), h);
  EXPECT_FALSE(hs.find(c, "nope"));
  EXPECT_EQ(hs.sign(c.dart("ab")), 1);
  EXPECT_EQ(hs.sign(c.dart("dc")), 1);
  EXPECT_EQ(hs.sign(c.dart("dc~")), -1);
}

TEST(Hyperplanes, HalfCarriersCoverCarrier) {
  auto c = lone_square();
  HyperplaneStructure hs(c);
  for (HyperplaneId h = 0; h < hs.size(); ++h) {
    auto both = hs.half_carrier({h, true});
    both |= hs.half_carrier({h, false});
    EXPECT_EQ(both.elements(), hs.carrier_vertices(h).elements());
    EXPECT_FALSE(hs.half_carrier({h, true}).intersects(hs.half_carrier({h, false})));
  }
}

TEST(Hyperplanes, TorusCoverHasTwoTransverse) {
  auto c = torus_cover();
  EXPECT_TRUE(validate_complex(c).ok());
  HyperplaneStructure hs(c);
  ASSERT_EQ(hs.size(), 2u);
  EXPECT_EQ(hs[0].edges.size(), 2u);
  EXPECT_EQ(hs[1].edges.size(), 2u);
  EXPECT_TRUE(hs.crosses(0, 1));
  EXPECT_TRUE(is_special(c).special);
}

TEST(Hyperplanes, MobiusIsOneSided) {
  auto c = mobius_square();
  HyperplaneStructure hs(c);
  auto h = *hs.find(c, "s");
  EXPECT_FALSE(hs[h].two_sided);
  EXPECT_TRUE(hs[h].embedded);
  EXPECT_TRUE(hs.orientations(h).empty());
  EXPECT_EQ(hs.sign(c.dart("s")), 0);
  auto r = is_special(c);
  EXPECT_FALSE(r.special);
  EXPECT_EQ(r.one_sided, std::vector<HyperplaneId>{h});
}

TEST(Hyperplanes, OrientationCountInvariant) {
  for (const auto& c : {lone_square(), one_vertex_torus(), mobius_square(), cycle_complex(5), torus_cover()}) {
    HyperplaneStructure hs(c);
    std::size_t edges = 0, total = 0, orientable = 0;
    for (HyperplaneId h = 0; h < hs.size(); ++h) {
      edges += hs[h].edges.size();
      total += hs.orientations(h).size();
      orientable += hs.orientable(h);
    }
    EXPECT_EQ(edges, c.num_edges());
    EXPECT_EQ(total, 2 * orientable);
  }
}

TEST(Special, TorusHasOnlyIndirect) {
  auto c = one_vertex_torus();
  auto r = is_special(c);
  EXPECT_TRUE(r.special);
  EXPECT_EQ(r.indirect_self_osculations.size(), 2u);
  EXPECT_TRUE(r.direct_self_osculations.empty());
}

TEST(Special, LoopSideSquareDirectlySelfOsculates) {
  auto c = loop_side_square();
  auto r = is_special(c);
  EXPECT_FALSE(r.special);
  ASSERT_FALSE(r.direct_self_osculations.empty());
  HyperplaneStructure hs(c);
  EXPECT_EQ(hs[r.direct_self_osculations[0].h].name, "e");
  EXPECT_NE(r.describe(c, hs).find("e"), std::string::npos);
}

TEST(Special, InterOsculation) {
  // Strip of two squares with its bottom-left and top-right corners glued.
  ComplexBuilder b;
  auto x = b.add_vertex("x"), a1 = b.add_vertex("a1"), a2 = b.add_vertex("a2"), b0 = b.add_vertex("b0"),
       b1 = b.add_vertex("b1");
  auto k1 = b.add_edge(x, a1, "k1"), k1t = b.add_edge(b0, b1, "k1t");
  auto k2 = b.add_edge(a1, a2, "k2"), k2t = b.add_edge(b1, x, "k2t");
  auto h0 = b.add_edge(x, b0, "h0"), h1 = b.add_edge(a1, b1, "h1"), h2 = b.add_edge(a2, x, "h2");
  b.add_square({k1, h1, k1t ^ 1u, h0 ^ 1u});
  b.add_square({k2, h2, k2t ^ 1u, h1 ^ 1u});
  auto c = b.build();
  HyperplaneStructure hs(c);
  auto r = is_special(c, hs);
  EXPECT_FALSE(r.special);
  EXPECT_TRUE(r.direct_self_osculations.empty());
  ASSERT_FALSE(r.inter_osculations.empty());
  for (const auto& o : r.inter_osculations) {
    EXPECT_EQ(c.vertex_name(o.at), "x");
    EXPECT_TRUE(hs.crosses(o.h, o.k));
  }
  EXPECT_FALSE(r.indirect_self_osculations.empty());
}

TEST(CrossingGraph, CycleHasNoEdges) {
  auto g = crossing_graph(cycle_complex(4));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.size(), 0u);
}

TEST(Collapse, IntervalToPoint) {
  auto c = interval();
  std::vector<HyperplaneId> hs{0};
  auto r = collapse(c, hs);
  EXPECT_EQ(r.complex.num_vertices(), 1u);
  EXPECT_EQ(r.complex.num_edges(), 0u);
  EXPECT_EQ(r.quotient.dart_map[0], kNone);
  EXPECT_EQ(r.quotient.vertex_map[0], r.quotient.vertex_map[1]);
}

TEST(Collapse, SquareToEdge) {
  auto c = lone_square();
  HyperplaneStructure hs(c);
  std::vector<HyperplaneId> one{*hs.find(c, "ab")};
  auto r = collapse(c, one);
  EXPECT_EQ(r.complex.num_vertices(), 2u);
  EXPECT_EQ(r.complex.num_edges(), 1u);
  EXPECT_EQ(r.complex.num_cells(2), 0u);
  EXPECT_EQ(r.quotient.dart_map[c.dart("bc")], r.quotient.dart_map[c.dart("ad")]);
}

TEST(Collapse, RejectsNonRetract) {
  auto c = one_vertex_torus();
  std::vector<HyperplaneId> one{0};
  EXPECT_THROW(collapse(c, one), NotCarrierRetract);
  auto m = mobius_square();
  HyperplaneStructure hs(m);
  std::vector<HyperplaneId> s{*hs.find(m, "s")};
  try {
    collapse(m, s);
    FAIL();
  } catch (const NotCarrierRetract& e) {
    EXPECT_EQ(e.hyperplane(), "s");
  }
  std::vector<HyperplaneId> twice{0, 0};
  EXPECT_THROW(collapse(interval(), twice), PreconditionError);
}

TEST(Collapse, OrderIndependentOnCube) {
  auto c = flag_fill(cube_shell(0x3f));
  HyperplaneStructure hs(c);
  ASSERT_EQ(hs.size(), 3u);
  std::vector<HyperplaneId> ids{0, 1, 2};
  for (std::size_t k = 2; k <= 3; ++k) {
    std::vector<HyperplaneId> sub(ids.begin(), ids.begin() + k);
    auto ref = collapse(c, sub).complex;
    do {
      auto other = collapse(c, sub).complex;
      EXPECT_TRUE(is_isomorphic(ref, other));
    } while (std::next_permutation(sub.begin(), sub.end()));
  }
}

TEST(Isomorphism, SelfAndRelabelled) {
  auto c = torus_cover();
  auto m = is_isomorphic(c, c);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->vertex_map, (std::vector<VertexId>{0, 1}));
  EXPECT_FALSE(is_isomorphic(cycle_complex(4), cycle_complex(5)));
  EXPECT_FALSE(is_isomorphic(lone_square(), cycle_complex(4)));
  EXPECT_FALSE(is_isomorphic(one_vertex_torus(), mobius_square()));
}

TEST(Isomorphism, FourCycleVsSquareBoundary) {
  auto sq = lone_square();
  ComplexBuilder b;
  for (VertexId v = 0; v < sq.num_vertices(); ++v) b.add_vertex(sq.vertex_name(v));
  for (DartId d = 0; d < sq.num_darts(); d += 2) b.add_edge(sq.origin(d), sq.terminus(d), sq.dart_name(d));
  EXPECT_TRUE(is_isomorphic(cycle_complex(4), b.build()));
}

TEST(Isomorphism, RespectsLabels) {
  auto c = one_vertex_torus();
  auto l1 = c.with_labels({"a+", "a-", "b+", "b-"});
  auto l2 = c.with_labels({"b+", "b-", "a+", "a-"});
  auto l3 = c.with_labels({"a+", "a-", "a+", "b-"});
  EXPECT_TRUE(is_isomorphic(l1, l2, true));
  EXPECT_FALSE(is_isomorphic(l1, l3, true));
  EXPECT_TRUE(is_isomorphic(l1, l3, false));
}

TEST(Isomorphism, SpecialnessInvariant) {
  auto a = loop_side_square();
  ComplexBuilder b;
  b.add_vertex("zz");
  b.add_vertex("yy");
  b.add_vertex("xx");
  auto e = b.add_edge(2, 1, "E"), g = b.add_edge(1, 0, "G"), f = b.add_edge(2, 0, "F"), h = b.add_edge(2, 2, "H");
  b.add_square({e, g, f ^ 1u, h ^ 1u});
  auto c = b.build();
  ASSERT_TRUE(is_isomorphic(a, c));
  EXPECT_EQ(is_special(a).special, is_special(c).special);
}
