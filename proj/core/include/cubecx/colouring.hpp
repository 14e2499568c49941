#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cubecx/complex.hpp"
#include "cubecx/graph.hpp"
#include "cubecx/hyperplanes.hpp"
#include "cubecx/vertex_set.hpp"

namespace cubecx {

// (κ, Γ): colour_of[h] is a vertex of `graph`; flipped[h] says the orientation
// sent to v+ is the non-canonical one.
struct SpecialColouring {
  SimplicialGraph graph;
  std::vector<std::size_t> colour_of;
  std::vector<bool> flipped;

  OrientedHyperplane positive(HyperplaneId h) const { return {h, !flipped[h]}; }
  // Colour sign of an oriented hyperplane: true for v+.
  bool is_plus(OrientedHyperplane o) const { return o.positive != flipped[o.hyperplane]; }
  std::vector<HyperplaneId> fibre(std::size_t v) const;
  std::size_t num_colours() const { return graph.order(); }
  bool operator==(const SpecialColouring& o) const {
    return graph.same_as(o.graph) && colour_of == o.colour_of && flipped == o.flipped;
  }
};

struct ColouringWitness {
  int condition = 0;
  std::vector<HyperplaneId> hyperplanes;
  std::optional<std::size_t> colour;
  std::string message;
};

struct ColouringReport {
  bool condition[5] = {false, true, true, true, true};  // index 1..4; 4 = minimality
  std::vector<ColouringWitness> witnesses;
  bool special() const { return condition[1] && condition[2] && condition[3]; }
  bool minimal() const { return special() && condition[4]; }
};

// Throws PreconditionError when colour_of is not total or out of range.
ColouringReport validate_colouring(const CubeComplex& c, const HyperplaneStructure& hs,
                                   const SpecialColouring& col);

// C(v): union of carriers of κ⁻¹(v). C(v^ε): union of the positive carriers
// of the oriented hyperplanes coloured v^ε.
VertexSet generalised_carrier(const HyperplaneStructure& hs, const SpecialColouring& col, std::size_t v);
VertexSet generalised_half_carrier(const HyperplaneStructure& hs, const SpecialColouring& col, std::size_t v,
                                   bool plus);

// Γ = crossing graph, κ = identity, canonical orientations. Requires a special complex.
SpecialColouring standard_colouring(const CubeComplex& c, const HyperplaneStructure& hs);
bool is_standard(const SpecialColouring& col, std::size_t num_hyperplanes);

// Germ labels "v+" on darts pointing along the v+ orientation, "v-" otherwise.
std::vector<std::optional<std::string>> germ_labels(const HyperplaneStructure& hs, const SpecialColouring& col);
CubeComplex with_colouring_labels(const CubeComplex& c, const HyperplaneStructure& hs,
                                  const SpecialColouring& col);
// Inverse of germ_labels over a given graph; throws FormatError on unknown or
// inconsistent labels.
SpecialColouring colouring_from_labels(const CubeComplex& c, const HyperplaneStructure& hs,
                                       const SimplicialGraph& graph);

struct EnumerationOptions {
  std::size_t cap = 1'000'000;  // partitions examined
  std::optional<std::size_t> max_classes;
};

// Every minimal special colouring up to renaming of colours and swapping the
// signs of a whole colour. Classes are ordered by least hyperplane id and each
// colour is named after its least hyperplane. `visit` returns false to stop.
// Returns the number of colourings visited; throws CapExceeded.
std::size_t enumerate_minimal_colourings(const CubeComplex& c, const HyperplaneStructure& hs,
                                         const EnumerationOptions& opts,
                                         const std::function<bool(const SpecialColouring&)>& visit);
std::vector<SpecialColouring> minimal_colourings(const CubeComplex& c, const HyperplaneStructure& hs,
                                                 const EnumerationOptions& opts = {});

// Builds the colouring with the given classes (lists of hyperplane ids) and
// orientation flips; Γ is derived from crossings. Names default to the least
// hyperplane's name.
SpecialColouring colouring_from_classes(const HyperplaneStructure& hs,
                                        const std::vector<std::vector<HyperplaneId>>& classes,
                                        std::vector<bool> flipped = {},
                                        std::vector<std::string> names = {});

}  // namespace cubecx
