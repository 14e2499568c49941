#include <gtest/gtest.h>

#include "cubecx/completion.hpp"
#include "cubecx/fixpoints.hpp"
#include "cubecx/generators.hpp"
#include "cubecx/isomorphism.hpp"
#include "cubecx/topology.hpp"
#include "small_complexes.hpp"

using namespace cubecx;
using namespace cubecx::testing;

namespace {

SimplicialGraph k66() {
  SimplicialGraph g;
  for (int i = 0; i < 12; ++i) g.add_vertex(std::to_string(i));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 6; b < 12; ++b) g.add_edge(a, b);
  return g;
}

void expect_ok(const CompletionBundle& b, const std::string& what) {
  auto r = verify_completion(b);
  EXPECT_TRUE(r.ok()) << what << ": " << (r.messages.empty() ? "" : r.messages[0]);
  EXPECT_EQ(b.completed.num_vertices(), b.base.num_vertices()) << what;
}

}  // namespace

TEST(Completion, Point) {
  auto b = canonical_completion(point());
  EXPECT_EQ(b.completed.num_vertices(), 1u);
  EXPECT_EQ(b.completed.num_edges(), 0u);
  EXPECT_TRUE(b.phi.is_identity());
  EXPECT_EQ(b.degree, 1u);
  expect_ok(b, "point");
}

TEST(Completion, CircleGetsThreeLoops) {
  auto b = canonical_completion(cycle_complex(1));
  EXPECT_EQ(b.completed.num_vertices(), 1u);
  EXPECT_EQ(b.completed.num_edges(), 3u);
  auto l = link_graph(b.completed, 0);
  EXPECT_EQ(l.order(), 6u);
  EXPECT_EQ(l.size(), 0u);
  EXPECT_EQ(b.phi.order(), 2u);
  expect_ok(b, "circle");
}

TEST(Completion, IntervalUsesCaseThree) {
  // Each end has one germ of the hyperplane: the H_1 loop back runs x -> y.
  auto b = canonical_completion(interval());
  EXPECT_EQ(b.completed.num_edges(), 6u);
  EXPECT_EQ(b.phi.order(), 6u);
  expect_ok(b, "interval");
}

TEST(Completion, TorusCover) {
  auto q = fixture("fig3-right").complex;
  auto b = canonical_completion(q);
  expect_ok(b, "fig3-right");
  for (VertexId v = 0; v < b.completed.num_vertices(); ++v)
    EXPECT_TRUE(graphs_isomorphic(link_graph(b.completed, v), k66()));
  EXPECT_EQ(b.degree, 2u);
  auto cov = check_covering(b.completed, *b.salvetti, *b.covering);
  EXPECT_TRUE(cov.covering) << cov.reason;
  EXPECT_EQ(cov.degree, 2u);
  EXPECT_TRUE(b.phi.power(6).is_identity());
  EXPECT_EQ(6u % b.phi.order(), 0u);
}

TEST(Completion, CorpusProperties) {
  std::vector<std::pair<std::string, CubeComplex>> qs = {
      {"4-cycle", droms(graphs::anticlique(2)).complex},
      {"square", lone_square()},
      {"torus", one_vertex_torus()},
      {"genus2", fixture("genus2").complex},
      {"droms-P3", droms(graphs::path(3)).complex},
      {"uc2c5", configuration_space(graphs::cycle(5), 2).complex},
  };
  for (const auto& [name, q] : qs) {
    auto b = canonical_completion(q);
    expect_ok(b, name);
    EXPECT_EQ(b.degree, q.num_vertices()) << name;
    // Fix(Φ) = Q as complexes too
    auto fs = fixed_set(b.completed, {b.phi});
    EXPECT_TRUE(is_isomorphic(fs.complex, b.base, true).has_value()) << name;
  }
}

TEST(Completion, RemarkIdentities) {
  for (auto q : {fixture("genus2").complex, droms(graphs::path(3)).complex, interval(), lone_square()}) {
    auto b = canonical_completion(q);
    HyperplaneStructure hs(q);
    for (VertexId x = 0; x < q.num_vertices(); ++x)
      for (HyperplaneId h = 0; h < hs.size(); ++h) {
        const auto& hn = hs[h].name;
        EXPECT_EQ(act(b, hn, -1, act(b, hn, +1, x)), x);
        EXPECT_EQ(act(b, hn, +1, act(b, hn, -1, x)), x);
        for (HyperplaneId k = 0; k < hs.size(); ++k) {
          if (!hs.crosses(h, k)) continue;
          const auto& kn = hs[k].name;
          for (int e : {-1, 1})
            EXPECT_EQ(act(b, kn, e, act(b, hn, +1, x)), act(b, hn, +1, act(b, kn, e, x)));
        }
      }
  }
}

TEST(Completion, NonSpecialRejected) {
  EXPECT_THROW(canonical_completion(mobius_square()), PreconditionError);
}

TEST(CompletionRacg, FourCycleConnectedCover) {
  auto q = droms(graphs::anticlique(2)).complex;
  auto b = canonical_completion_racg(q, {0});
  EXPECT_TRUE(b.warnings.empty());
  EXPECT_EQ(b.base.num_vertices(), 8u);
  expect_ok(b, "racg 4-cycle");
  EXPECT_EQ(b.degree, 2 * q.num_vertices());
  // Γ is 4 isolated hyperplanes, so Γ[3/2] is 12 isolated points.
  EXPECT_EQ(b.salvetti_target.order(), 12u);
  EXPECT_EQ(b.salvetti_target.size(), 0u);
  for (VertexId v = 0; v < b.completed.num_vertices(); ++v)
    EXPECT_TRUE(link_graph(b.completed, v, true).same_as(b.salvetti_target));
  EXPECT_THROW(act(b, "x", 1, 0), PreconditionError);
}

TEST(CompletionRacg, IndirectSelfOsculationFaults) {
  EXPECT_THROW(canonical_completion_racg(one_vertex_torus(), {0}), PreconditionError);
}

TEST(CompletionRacg, DisconnectedCoverWarns) {
  auto b = canonical_completion_racg(lone_square(), {});
  ASSERT_EQ(b.warnings.size(), 1u);
  expect_ok(b, "racg square");
  auto comps = components(b.completed);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_TRUE(is_isomorphic(comps[0].complex, comps[1].complex).has_value());
}

TEST(CompletionRacg, Genus2FreeOfSelfOsculation) {
  auto q = fixture("genus2").complex;
  ASSERT_TRUE(is_special(q).indirect_self_osculations.empty());
  auto b = canonical_completion_racg(q, {0});
  expect_ok(b, "racg genus2");
}
