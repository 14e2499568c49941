#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubecx/complex.hpp"
#include "cubecx/cubical_map.hpp"
#include "cubecx/graph.hpp"
#include "cubecx/hyperplanes.hpp"

namespace cubecx {

// Germ labels: "H.i+" / "H.i-" (RAAG variant, H a hyperplane name of the
// input, 1 <= i <= 3), "H.i" at both ends (RACG variant). Edges already in
// the base carry index 1. New edges are named "H.i@<vertex>" (an edge run
// from that vertex) or "H.i@<dart>" (parallel to a base edge).
struct CompletionBundle {
  CubeComplex base;          // Q (relabelled) or the double cover Q₂
  CubeComplex completed;     // Q̂ or Q̂₂, same vertex set as base
  CubicalMap inclusion;      // base -> completed
  CubicalAutomorphism phi;
  SimplicialGraph gamma;            // crossing graph of the input
  SimplicialGraph salvetti_target;  // Γ[3/2]
  // RAAG variant only: salvetti(Γ[3/2]) and the label-driven map onto it.
  std::optional<CubeComplex> salvetti;
  std::optional<CubicalMap> covering;
  bool racg = false;
  std::size_t degree = 0;  // sheets over the one-vertex target
  std::vector<std::string> warnings;
};

// Orientation: a hyperplane's lowest dart is positive. Throws
// PreconditionError on a non-special input; InternalConsistencyError if a
// maximal path in case (3) fails to terminate or a square fails to close.
CompletionBundle canonical_completion(const CubeComplex& q);

// Completion of double_cover(q, s). Throws PreconditionError if q is not
// special or has an indirect self-osculation (pass to a finer cover first).
// A disconnected cover is allowed with a warning.
CompletionBundle canonical_completion_racg(const CubeComplex& q, const std::vector<HyperplaneId>& s);

// H^±·x in a RAAG completion: the far end of the H.1± germ at x.
VertexId act(const CompletionBundle& b, const std::string& hyperplane, int sign, VertexId x);

struct CoveringReport {
  bool covering = true;
  std::size_t degree = 0;  // preimages of target vertex 0
  std::string reason;
};
// f is a covering iff at every source vertex it maps germs, and corners of
// every cube, bijectively onto those at the image vertex.
CoveringReport check_covering(const CubeComplex& source, const CubeComplex& target, const CubicalMap& f);

struct CompletionReport {
  bool special = false;
  bool links = false;          // label-isomorphic to Γ[3] (RAAG) or Γ[3/2] (RACG)
  bool locally_convex = false; // base inside completed
  bool phi_order = false;      // Φ⁶ = id
  bool fix_is_base = false;
  bool covering = false;
  std::size_t phi_order_value = 0;
  std::size_t degree = 0;
  std::vector<std::string> messages;
  bool ok() const { return special && links && locally_convex && phi_order && fix_is_base && covering; }
};
CompletionReport verify_completion(const CompletionBundle& b);

}  // namespace cubecx
