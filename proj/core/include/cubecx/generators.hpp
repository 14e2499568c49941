#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubecx/complex.hpp"
#include "cubecx/cubical_map.hpp"
#include "cubecx/divisibility.hpp"
#include "cubecx/graph.hpp"

namespace cubecx {

// One vertex "*", a loop "v" (germs "v+"/"v-") per vertex of g, and one
// k-cube per k-clique.
CubeComplex salvetti(const SimplicialGraph& g);

struct PatternedComplex {
  CubeComplex complex;  // carries the colouring's germ labels
  DividingPattern pattern;
};

// Cubes of [0,1]^V whose edge labels span a clique. Vertices are bit strings
// (character i is the coordinate of graph vertex i); the colouring is by
// label with v+ pointing 0 -> 1, and H<v> has minus = coordinate 0.
PatternedComplex droms(const SimplicialGraph& g);

// E(Γ): one vertex "p-q" per edge of g, adjacent when the edges are disjoint.
SimplicialGraph edge_graph(const SimplicialGraph& g);

// UC_n(g). Vertices "{a,b,...}"; an edge moving a token from p to q (p < q
// in vertex order) is coloured "p-q" with v+ at the end holding q. The
// colouring graph is E(g) restricted to colours that occur; H<a> has zero
// the hyperplanes of edges at a and plus the subsets containing a.
// Throws PreconditionError unless g is connected and n <= |V|.
PatternedComplex configuration_space(const SimplicialGraph& g, std::size_t n);

// Γ[N]: vertices "v.i+" and "v.i-" (1 <= i <= N). Γ[N/2]: vertices "v.i".
SimplicialGraph octahedralisation(const SimplicialGraph& g, std::size_t n);
SimplicialGraph half_octahedralisation(const SimplicialGraph& g, std::size_t n);

struct DoubleCover {
  CubeComplex complex;     // vertices "x/0", "x/1"; darts "d/0", "d/1"
  CubicalMap projection;   // onto the base
  bool connected = false;
};
// Crossing a hyperplane in `s` switches sheets.
DoubleCover double_cover(const CubeComplex& q, const std::vector<HyperplaneId>& s);

struct Fixture {
  std::string name;
  CubeComplex complex;
  std::optional<SpecialColouring> colouring;
  std::optional<DividingPattern> pattern;
};
std::vector<std::string> fixture_names();
// Throws PreconditionError on an unknown name.
Fixture fixture(const std::string& name);

}  // namespace cubecx
