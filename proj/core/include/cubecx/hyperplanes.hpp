#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubecx/complex.hpp"
#include "cubecx/graph.hpp"
#include "cubecx/vertex_set.hpp"

namespace cubecx {

struct Hyperplane {
  std::string name;            // name of its lowest dart
  std::vector<EdgeId> edges;   // ascending
  std::vector<CellRef> carrier;  // closed cells (dim >= 1) containing one of its edges
  bool embedded = true;        // no square has both axes dual to it
  bool two_sided = true;
};

// `positive` means the canonical orientation: the one containing the
// hyperplane's lowest dart.
struct OrientedHyperplane {
  HyperplaneId hyperplane = 0;
  bool positive = true;
  OrientedHyperplane flipped() const { return {hyperplane, !positive}; }
  auto operator<=>(const OrientedHyperplane&) const = default;
};

class HyperplaneStructure {
 public:
  explicit HyperplaneStructure(const CubeComplex& c);

  std::size_t size() const { return planes_.size(); }
  const Hyperplane& operator[](HyperplaneId h) const { return planes_[h]; }
  const std::vector<Hyperplane>& all() const { return planes_; }

  HyperplaneId of_edge(EdgeId e) const { return of_edge_[e]; }
  HyperplaneId of_dart(DartId d) const { return of_edge_[d >> 1]; }
  // +1 if d points along the canonical orientation, -1 against, 0 if the
  // hyperplane has no orientation.
  int sign(DartId d) const { return sign_[d]; }
  // Looks up by hyperplane name or by the name of any dart dual to it.
  std::optional<HyperplaneId> find(const CubeComplex& c, const std::string& name) const;

  bool orientable(HyperplaneId h) const { return planes_[h].two_sided && planes_[h].embedded; }
  std::vector<OrientedHyperplane> orientations(HyperplaneId h) const;
  // Darts of h pointing along o.
  std::vector<DartId> darts(OrientedHyperplane o) const;

  bool crosses(HyperplaneId a, HyperplaneId b) const;
  const std::set<std::pair<HyperplaneId, HyperplaneId>>& crossings() const { return crossings_; }

  // Hyperplane dual to axis i of cube (k, id), k >= 1.
  HyperplaneId axis(const CubeFrame& f, int i) const { return of_edge_[f.axis_edge(i)]; }

  const VertexSet& carrier_vertices(HyperplaneId h) const { return carrier_vertices_[h]; }
  // Vertices of C(o): termini of the darts pointing along o.
  const VertexSet& half_carrier(OrientedHyperplane o) const {
    return half_[2 * o.hyperplane + (o.positive ? 0 : 1)];
  }
  // Two-sided, embedded, and the half-carriers share no vertex.
  bool is_carrier_retract(HyperplaneId h) const;

 private:
  std::vector<Hyperplane> planes_;
  std::vector<HyperplaneId> of_edge_;
  std::vector<int> sign_;
  std::vector<std::vector<DartId>> positive_darts_;
  std::set<std::pair<HyperplaneId, HyperplaneId>> crossings_;
  std::vector<VertexSet> carrier_vertices_;
  std::vector<VertexSet> half_;
};

struct Osculation {
  HyperplaneId h = 0;
  HyperplaneId k = 0;  // == h for self-osculation
  VertexId at = 0;
  DartId first = 0;
  DartId second = 0;
};

struct SpecialReport {
  bool special = true;
  std::vector<HyperplaneId> not_embedded;
  std::vector<HyperplaneId> one_sided;
  std::vector<Osculation> direct_self_osculations;
  std::vector<Osculation> indirect_self_osculations;  // informational
  std::vector<Osculation> inter_osculations;
  std::string describe(const CubeComplex& c, const HyperplaneStructure& hs) const;
};

SpecialReport is_special(const CubeComplex& c);
SpecialReport is_special(const CubeComplex& c, const HyperplaneStructure& hs);

// Vertices are hyperplane names.
SimplicialGraph crossing_graph(const CubeComplex& c);
SimplicialGraph crossing_graph(const HyperplaneStructure& hs);

}  // namespace cubecx
