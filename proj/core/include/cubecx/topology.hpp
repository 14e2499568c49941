#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cubecx/complex.hpp"
#include "cubecx/cubical_map.hpp"
#include "cubecx/graph.hpp"

namespace cubecx {

// Link of a vertex: germs are link vertices, corners of (k+1)-cubes are
// k-simplices (each a sorted dart list; k >= 1).
struct Link {
  VertexId at = 0;
  std::vector<DartId> germs;
  std::vector<std::vector<DartId>> simplices;
  std::vector<std::optional<std::string>> labels;  // parallel to germs
};

Link link(const CubeComplex& c, VertexId v);  // throws PreconditionError on unknown v
// 1-skeleton of the link; vertex names are germ labels when `by_label` and
// every germ carries one, dart names otherwise.
SimplicialGraph link_graph(const CubeComplex& c, VertexId v, bool by_label = false);

struct NpcReport {
  bool npc = true;
  std::optional<VertexId> vertex;
  std::vector<DartId> witness;  // failing clique or repeated simplex
  std::string reason;
};
NpcReport is_npc(const CubeComplex& c);

// Adds every higher cube whose boundary is present, to a fixed point.
CubeComplex flag_fill(const CubeComplex& c);

struct Subcomplex {
  CubeComplex complex;
  CubicalMap inclusion;  // into the ambient complex
};

// Full subcomplex on a vertex set (every cell whose corners all lie in it).
Subcomplex induced_subcomplex(const CubeComplex& c, const std::vector<VertexId>& vertices);
std::vector<std::size_t> vertex_components(const CubeComplex& c);
std::vector<Subcomplex> components(const CubeComplex& c);

long euler_characteristic(const CubeComplex& c);

// Every cube of `c` at a vertex in the image of `inc`, spanned there by image
// darts, is itself in the image. `why` gets the first offending cube.
bool locally_convex_image(const CubeComplex& c, const CubicalMap& inc, std::string* why = nullptr);

struct MedianReport {
  bool median = true;
  std::optional<std::array<VertexId, 3>> witness;
  std::string reason;
};
// 1-skeleton median test. Throws PreconditionError on a disconnected input.
MedianReport is_median_graph(const CubeComplex& c);
MedianReport is_median_graph(const SimplicialGraph& g);

// Worker count from CUBECX_THREADS (default: hardware concurrency).
unsigned worker_count();

}  // namespace cubecx
