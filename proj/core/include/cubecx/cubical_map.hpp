#pragma once

#include <optional>
#include <vector>

#include "cubecx/complex.hpp"

namespace cubecx {

// Combinatorial map between complexes. dart_map entries are kNone for darts
// crushed to a vertex (collapse quotients); cube_map[k] likewise.
struct CubicalMap {
  std::vector<VertexId> vertex_map;
  std::vector<DartId> dart_map;
  std::vector<std::vector<CellId>> cube_map;  // index k >= 2

  bool operator==(const CubicalMap&) const = default;
};

// Checks incidences and fills cube_map; throws PreconditionError when some
// image is not a cell of `target`.
CubicalMap make_cubical_map(const CubeComplex& source, const CubeComplex& target,
                            std::vector<VertexId> vertex_map, std::vector<DartId> dart_map);
CubicalMap identity_map(const CubeComplex& c);
// g ∘ f
CubicalMap compose(const CubicalMap& g, const CubicalMap& f);
bool is_injective(const CubicalMap& f);

// Bijective self-map of one complex.
class CubicalAutomorphism {
 public:
  CubicalAutomorphism() = default;
  // Throws PreconditionError unless the map is a bijection of c onto itself.
  CubicalAutomorphism(const CubeComplex& c, std::vector<VertexId> vertex_map, std::vector<DartId> dart_map);
  static CubicalAutomorphism identity(const CubeComplex& c);

  const CubicalMap& map() const { return map_; }
  VertexId vertex(VertexId v) const { return map_.vertex_map[v]; }
  DartId dart(DartId d) const { return map_.dart_map[d]; }
  CellId cube(int k, CellId id) const;
  CubeFrame apply(const CubeFrame& f) const;

  CubicalAutomorphism then(const CubicalAutomorphism& next) const;  // next ∘ this
  CubicalAutomorphism inverse() const;
  CubicalAutomorphism power(long n) const;
  bool is_identity() const;
  std::size_t order(std::size_t cap = 1'000'000) const;

  bool operator==(const CubicalAutomorphism& o) const { return map_ == o.map_; }

 private:
  CubicalMap map_;
};

// Breadth-first closure under composition; throws CapExceeded past `cap` elements.
std::vector<CubicalAutomorphism> group_closure(const CubeComplex& c,
                                               const std::vector<CubicalAutomorphism>& generators,
                                               std::size_t cap = 10'000);

}  // namespace cubecx
