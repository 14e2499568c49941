#include <gtest/gtest.h>

#include "cubecx/complex.hpp"
#include "cubecx/topology.hpp"
#include "small_complexes.hpp"

using namespace cubecx;
using namespace cubecx::testing;

namespace {

RawComplex raw_square() {
  RawComplex r;
  r.vertices = {"a", "b", "c", "d"};
  r.darts = {{"ab", "a", "ab~", {}}, {"ab~", "b", "ab", {}}, {"bc", "b", "bc~", {}}, {"bc~", "c", "bc", {}},
             {"dc", "d", "dc~", {}}, {"dc~", "c", "dc", {}}, {"ad", "a", "ad~", {}}, {"ad~", "d", "ad", {}}};
  r.squares = {{"ab", "bc", "dc~", "ad~"}};
  return r;
}

bool has_kind(const ValidationReport& r, const std::string& kind) {
  for (const auto& v : r.violations)
    if (v.kind == kind) return true;
  return false;
}

}  // namespace

TEST(Validate, SingleVertexIsValid) {
  RawComplex r;
  r.vertices = {"x"};
  EXPECT_TRUE(validate_complex(r).ok());
}

TEST(Validate, SquareParsesAndRoundTrips) {
  auto r = raw_square();
  ASSERT_TRUE(validate_complex(r).ok()) << validate_complex(r).summary();
  auto c = from_raw(r);
  EXPECT_EQ(c.num_cells(2), 1u);
  auto back = to_raw(c);
  auto again = from_raw(back);
  EXPECT_EQ(again.num_darts(), 8u);
  EXPECT_TRUE(validate_complex(c).ok());
}

TEST(Validate, MissingReverseIsInvolutionViolation) {
  auto r = raw_square();
  r.darts.pop_back();  // ad~ gone, ad still points at it
  auto rep = validate_complex(r);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(has_kind(rep, "involution")) << rep.summary();
  EXPECT_THROW(from_raw(r), InvalidComplex);
}

TEST(Validate, OpenSquareAndUnknownVertex) {
  auto r = raw_square();
  r.squares = {{"ab", "bc", "ad~", "dc~"}};
  EXPECT_TRUE(has_kind(validate_complex(r), "square_not_closed"));
  r = raw_square();
  r.darts[0].origin = "nowhere";
  EXPECT_TRUE(has_kind(validate_complex(r), "unknown_vertex"));
}

TEST(Validate, SecondSquareOnSameGermPairRejected) {
  auto r = raw_square();
  r.darts.push_back({"ab2", "a", "ab2~", {}});
  r.darts.push_back({"ab2~", "b", "ab2", {}});
  r.squares.push_back({"ab", "bc", "dc~", "ad~"});
  EXPECT_TRUE(has_kind(validate_complex(r), "duplicate_cell"));
}

TEST(Validate, CubeFacesMustAssemble) {
  auto shell = to_raw(flag_fill(cube_shell(0x3f)));
  ASSERT_EQ(shell.cubes.at(3).size(), 1u);
  EXPECT_TRUE(validate_complex(shell).ok());
  auto bad = shell;
  bad.cubes[3][0].pop_back();
  EXPECT_TRUE(has_kind(validate_complex(bad), "cube_face_count"));
  bad = shell;
  bad.cubes[3][0][0] = 99;
  EXPECT_TRUE(has_kind(validate_complex(bad), "cube_face_unknown"));
  bad = shell;
  bad.cubes[3][0][1] = bad.cubes[3][0][0];
  EXPECT_FALSE(validate_complex(bad).ok());
}

TEST(Link, IsolatedVertexIsEmpty) {
  auto l = link(point(), 0);
  EXPECT_TRUE(l.germs.empty());
  EXPECT_TRUE(l.simplices.empty());
}

TEST(Link, LoneSquareCorner) {
  auto c = lone_square();
  auto l = link(c, c.vertex("a"));
  EXPECT_EQ(l.germs.size(), 2u);
  EXPECT_EQ(l.simplices.size(), 1u);
}

TEST(Link, OneVertexTorusIsFourCycle) {
  auto c = one_vertex_torus();
  auto l = link(c, 0);
  EXPECT_EQ(l.germs.size(), 4u);
  EXPECT_EQ(l.simplices.size(), 4u);
  EXPECT_TRUE(graphs_isomorphic(link_graph(c, 0), graphs::cycle(4)));
}

TEST(Link, UnknownVertexThrows) { EXPECT_THROW(link(point(), 3), PreconditionError); }

TEST(Npc, TorusAndCycles) {
  EXPECT_TRUE(is_npc(one_vertex_torus()).npc);
  EXPECT_TRUE(is_npc(cycle_complex(4)).npc);
  EXPECT_TRUE(is_npc(lone_square()).npc);
}

TEST(Npc, ThreeSquaresAtCornerFail) {
  // Faces x=0, y=0, z=0 meet at 000 with no 3-cube.
  auto c = cube_shell(0b010101, true);
  auto r = is_npc(c);
  EXPECT_FALSE(r.npc);
  ASSERT_TRUE(r.vertex);
  EXPECT_EQ(c.vertex_name(*r.vertex), "000");
  EXPECT_EQ(r.witness.size(), 3u);
}

TEST(FlagFill, AddsTheCube) {
  auto shell = cube_shell(0x3f);
  EXPECT_FALSE(is_npc(shell).npc);
  auto filled = flag_fill(shell);
  EXPECT_EQ(filled.num_cells(3), 1u);
  EXPECT_TRUE(is_npc(filled).npc);
  EXPECT_EQ(filled.euler_characteristic(), 1);
  auto again = flag_fill(filled);
  EXPECT_EQ(again.num_cells(3), 1u);
  EXPECT_EQ(to_raw(again).cubes, to_raw(filled).cubes);
}

TEST(FlagFill, MissingFaceBlocksFill) {
  auto filled = flag_fill(cube_shell(0x3f & ~(1u << 5)));
  EXPECT_EQ(filled.num_cells(3), 0u);
}

TEST(FlagFill, CommutesWithDisjointUnion) {
  ComplexBuilder b(cube_shell(0x3f));
  auto x = b.add_vertex("extra");
  b.add_edge(x, x, "loop");
  auto u = flag_fill(b.build());
  EXPECT_EQ(u.num_cells(3), 1u);
  EXPECT_EQ(u.num_cells(2), 6u);
  EXPECT_EQ(u.num_edges(), 13u);
}

TEST(Euler, SmallComplexes) {
  EXPECT_EQ(point().euler_characteristic(), 1);
  EXPECT_EQ(cycle_complex(4).euler_characteristic(), 0);
  EXPECT_EQ(one_vertex_torus().euler_characteristic(), 0);
  EXPECT_EQ(lone_square().euler_characteristic(), 1);
}

TEST(Components, SplitAndChiAdds) {
  ComplexBuilder b(lone_square());
  auto p = b.add_vertex("p"), q = b.add_vertex("q");
  b.add_edge(p, q, "pq");
  b.add_vertex("r");
  auto c = b.build();
  auto parts = components(c);
  ASSERT_EQ(parts.size(), 3u);
  long sum = 0;
  for (const auto& s : parts) sum += s.complex.euler_characteristic();
  EXPECT_EQ(sum, c.euler_characteristic());
  EXPECT_EQ(parts[0].complex.num_cells(2), 1u);
  EXPECT_EQ(parts[1].inclusion.vertex_map.size(), 2u);
}

TEST(Median, CycleAndSquare) {
  EXPECT_TRUE(is_median_graph(cycle_complex(4)).median);
  EXPECT_TRUE(is_median_graph(lone_square()).median);
  auto hex = is_median_graph(cycle_complex(6));
  EXPECT_FALSE(hex.median);
  EXPECT_TRUE(hex.witness.has_value());
  EXPECT_FALSE(is_median_graph(one_vertex_torus()).median);
  EXPECT_TRUE(is_median_graph(flag_fill(cube_shell(0x3f))).median);
}

TEST(Median, DisconnectedThrows) {
  ComplexBuilder b;
  b.add_vertex("a");
  b.add_vertex("b");
  EXPECT_THROW(is_median_graph(b.build()), PreconditionError);
}

TEST(Median, GraphForms) {
  EXPECT_TRUE(is_median_graph(graphs::path(5)).median);
  EXPECT_FALSE(is_median_graph(graphs::complete(3)).median);
  EXPECT_FALSE(is_median_graph(graphs::parse("a-b,b-c,c-a,c-d")).median);
}

TEST(Builder, RejectsDuplicateNames) {
  ComplexBuilder b;
  auto x = b.add_vertex("x");
  EXPECT_THROW(b.add_vertex("x"), PreconditionError);
  b.add_edge(x, x, "a");
  EXPECT_THROW(b.add_edge(x, x, "a"), PreconditionError);
}

TEST(Builder, DuplicateSquareMerges) {
  ComplexBuilder b(lone_square());
  const auto& c = b.view();
  auto [id, inserted] = b.add_square({c.dart("bc"), c.dart("dc~"), c.dart("ad~"), c.dart("ab")});
  EXPECT_FALSE(inserted);
  EXPECT_EQ(id, 0u);
}
