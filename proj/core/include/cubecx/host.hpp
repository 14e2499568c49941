#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubecx/complex.hpp"
#include "cubecx/cubical_map.hpp"
#include "cubecx/divisibility.hpp"
#include "cubecx/graph.hpp"

namespace cubecx {

// Labels: an 𝔼-edge crossing partition H runs from the H- side to the H+
// side, with germs "H+" at its origin and "H-" at its terminus. A colour
// edge has germs "v+" and "v-". Vertices are sign strings ("+-+"), or "*"
// when there are no partitions.

struct HostOptions {
  // 𝔼 = the whole n-cube; the partitions then span a clique in Γ̂.
  bool full_cube = false;
  // Attach squares only and let flag_fill supply the higher cubes, instead
  // of one cube per clique of Γ̂ at every vertex.
  bool squares_then_fill = false;
};

struct ExtendedHost {
  std::size_t n = 0;
  CubeComplex complex;     // M̂_N; 𝔼-edge copies are "<dart>^s", germs "H^s±"
  SimplicialGraph graph;   // Γ̂_N
  CubicalAutomorphism phi; // copy s -> s % N + 1
};

struct HostBundle {
  CubeComplex base;  // Q with its colour germ labels
  DividingPattern pattern;
  HostOptions options;
  SimplicialGraph gamma_hat;  // colours first, then partitions
  std::size_t num_colours = 0;
  CubeComplex e_complex;
  CubeComplex host;
  CubicalMap embedding_j;  // base -> host
  std::vector<std::vector<int>> sign_vectors;  // per host vertex, ±1 per partition
  std::optional<ExtendedHost> extended;
};

// Throws PreconditionError when the pattern is degenerate (no sign vector).
CubeComplex build_e_complex(const CubeComplex& q, const DividingPattern& p, bool full_cube = false);

// Throws InternalConsistencyError if a flipped sign vector is not a vertex
// or the construction fails to close up; PreconditionError if a colour and
// a partition share a name.
HostBundle build_host(const CubeComplex& q, const DividingPattern& p, const HostOptions& opts = {});

struct HostReport {
  bool special = false;          // (i)
  bool crossing_graph = false;   // (ii) equals Γ̂, hyperplanes named by labels
  bool salvetti = false;         // (iii) collapsing the partition hyperplanes
  bool locally_convex = false;   // (iv) j(Q)
  bool colour_edges_in_q = false;  // (v)
  bool injective = false;
  std::vector<std::string> messages;
  bool ok() const { return special && crossing_graph && salvetti && locally_convex && colour_edges_in_q && injective; }
};
HostReport verify_host(const HostBundle& b);

// Structural check that `c` is the Salvetti complex of `g`, reading each
// edge's letter off its germ labels. Empty string when it is.
std::string check_salvetti_structure(const CubeComplex& c, const SimplicialGraph& g);

// Letter of a germ label: "v+" -> "v".
std::string label_letter(const std::string& label);

// Γ̂_N from Γ̂ whose last `partitions` vertices are the partitions.
SimplicialGraph extended_graph(const SimplicialGraph& gamma_hat, std::size_t partitions, std::size_t n);

// Throws PreconditionError for N < 2.
HostBundle build_extended_host(HostBundle b, std::size_t n);
// Throws PreconditionError without an extended host.
CubicalAutomorphism host_automorphism(const HostBundle& b);

}  // namespace cubecx
