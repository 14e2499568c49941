#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "cubecx/generators.hpp"
#include "cubecx/host.hpp"
#include "cubecx/io.hpp"
#include "cubecx/isomorphism.hpp"
#include "cubecx/topology.hpp"
#include "small_complexes.hpp"

using namespace cubecx;
using namespace cubecx::testing;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("cubecx_io_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Io, ComplexRoundTrip) {
  for (const auto& c : std::vector<CubeComplex>{point(), lone_square(), one_vertex_torus(), cube_shell(0x3f), flag_fill(cube_shell(0x3f)),
                        droms(graphs::path(3)).complex, fixture("genus2").complex}) {
    auto j = io::complex_json(c);
    auto back = io::complex_from_json(j);
    EXPECT_EQ(io::complex_json(back), j);
    EXPECT_EQ(back.num_cells(2), c.num_cells(2));
    EXPECT_EQ(back.dimension(), c.dimension());
  }
}

TEST(Io, GraphRoundTrip) {
  for (const auto& g : std::vector<SimplicialGraph>{SimplicialGraph{}, graphs::cycle(5), graphs::random(6, 0.5, 3)}) {
    auto back = io::graph_from_json(io::graph_json(g));
    EXPECT_TRUE(back.same_as(g));
    EXPECT_EQ(back.names(), g.names());
  }
}

TEST(Io, ColouringAndPatternRoundTrip) {
  for (const auto& name : fixture_names()) {
    auto f = fixture(name);
    io::ComplexDocument d{f.name, f.complex, f.colouring, f.pattern};
    auto j = io::complex_document(d);
    auto back = io::complex_document_from_json(j);
    EXPECT_EQ(back.name, name);
    EXPECT_EQ(back.colouring.has_value(), f.colouring.has_value());
    if (f.colouring) EXPECT_TRUE(*back.colouring == *f.colouring) << name;
    if (f.pattern) {
      ASSERT_TRUE(back.pattern);
      EXPECT_TRUE(back.pattern->colouring == f.pattern->colouring);
      EXPECT_EQ(back.pattern->partitions, f.pattern->partitions);
    }
    EXPECT_EQ(io::complex_document(back), j);
  }
}

TEST(Io, DromsPatternRoundTrip) {
  auto pc = droms(graphs::path(3));
  HyperplaneStructure hs(pc.complex);
  auto back = io::pattern_from_json(io::pattern_json(pc.complex, hs, pc.pattern), pc.complex, hs);
  EXPECT_TRUE(back.colouring == pc.pattern.colouring);
  EXPECT_EQ(back.partitions, pc.pattern.partitions);
}

TEST(Io, AutomorphismRoundTrip) {
  auto fx = fixture("genus2");
  auto b = build_extended_host(build_host(fx.complex, *fx.pattern), 3);
  const auto& c = b.extended->complex;
  auto back = io::automorphism_from_json(io::automorphism_json(c, b.extended->phi), c);
  EXPECT_TRUE(back == b.extended->phi);
}

TEST(Io, HostRoundTrip) {
  auto fx = fixture("genus2");
  auto b = build_host(fx.complex, *fx.pattern);
  auto j = io::host_json(b);
  auto back = io::host_from_json(j);
  EXPECT_EQ(io::complex_json(back.host), io::complex_json(b.host));
  EXPECT_FALSE(back.extended);
  auto x = build_extended_host(b, 2);
  auto jx = io::host_json(x);
  auto backx = io::host_from_json(jx);
  ASSERT_TRUE(backx.extended);
  EXPECT_EQ(io::host_json(backx), jx);
  // tampering with the stored host is caught
  jx["host"]["vertices"][0] = "zzz";
  EXPECT_THROW(io::host_from_json(jx), FormatError);
}

TEST(Io, SchemaChecks) {
  auto j = io::document("complex");
  EXPECT_EQ(io::check_document(j, "complex"), "complex");
  EXPECT_THROW(io::check_document(j, "host"), FormatError);
  j["schema"] = "cubecx/2";
  EXPECT_THROW(io::check_document(j), FormatError);
  j["schema"] = "other/1";
  EXPECT_THROW(io::check_document(j), FormatError);
  j.erase("schema");
  EXPECT_THROW(io::check_document(j), FormatError);
  io::Json bad = {{"schema", "cubecx/1"}, {"type", "complex"}, {"complex", {{"vertices", {"a"}}}}};
  EXPECT_THROW(io::complex_document_from_json(bad), FormatError);
}

TEST(Io, MalformedJsonFile) {
  auto p = scratch("broken.json");
  std::ofstream(p) << "{ not json";
  EXPECT_THROW(io::read_json(p), FormatError);
  EXPECT_THROW(io::read_json(scratch("missing.json")), FormatError);
}

TEST(Io, AtomicWrite) {
  auto p = scratch("sub/out.json");
  io::write_atomic(p, "first\n");
  io::write_atomic(p, "second\n");
  std::ifstream in(p);
  std::string s;
  std::getline(in, s);
  EXPECT_EQ(s, "second");
  for (const auto& e : fs::directory_iterator(p.parent_path()))
    EXPECT_EQ(e.path().filename(), "out.json");
}

TEST(Io, FixtureFilesMatchBuilders) {
  for (const auto& name : fixture_names()) {
    auto path = fs::path(CUBECX_DATA_DIR) / "fixtures" / (name + ".json");
    ASSERT_TRUE(fs::exists(path)) << path;
    auto doc = io::complex_document_from_json(io::read_json(path));
    auto f = fixture(name);
    EXPECT_EQ(io::complex_json(doc.complex), io::complex_json(f.complex)) << name;
    EXPECT_TRUE(is_isomorphic(doc.complex, f.complex, true).has_value());
  }
}

TEST(Dot, EmptyGraph) {
  auto s = io::export_dot(SimplicialGraph{});
  EXPECT_EQ(s, "digraph \"G\" {\n  edge [dir=none];\n}\n");
}

TEST(Dot, Deterministic) {
  auto c = fixture("genus2").complex;
  EXPECT_EQ(io::export_dot(c), io::export_dot(io::complex_from_json(io::complex_json(c))));
  auto s = io::export_dot(with_colouring_labels(c, HyperplaneStructure(c), *fixture("genus2").colouring));
  EXPECT_NE(s.find("taillabel="), std::string::npos);
  EXPECT_NE(s.find("color="), std::string::npos);
}

namespace {
std::size_t count_nodes(const std::string& dot) {
  std::size_t n = 0;
  std::istringstream in(dot);
  std::string line;
  while (std::getline(in, line))
    if (line.size() > 2 && line.back() == ';' && line.find("->") == std::string::npos && line.find('[') == std::string::npos) ++n;
  return n;
}
std::size_t count_edges(const std::string& dot) {
  std::size_t n = 0, at = 0;
  while ((at = dot.find("->", at)) != std::string::npos) ++n, at += 2;
  return n;
}
}  // namespace

TEST(Dot, Genus2GammaHat) {
  auto fx = fixture("genus2");
  auto b = build_host(fx.complex, *fx.pattern);
  auto dot = io::export_dot(b.gamma_hat);
  EXPECT_EQ(count_nodes(dot), 8u);
  EXPECT_EQ(count_edges(dot), b.gamma_hat.size());
  auto x = build_extended_host(b, 2);
  EXPECT_EQ(count_nodes(io::export_dot(x.extended->graph)), 6u + 2 * 2);
}
