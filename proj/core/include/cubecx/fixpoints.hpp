#pragma once

#include <map>
#include <vector>

#include "cubecx/complex.hpp"
#include "cubecx/cubical_map.hpp"
#include "cubecx/hyperplanes.hpp"
#include "cubecx/topology.hpp"

namespace cubecx {

// Hyperplanes some element of the generated group maps to themselves with
// the orientation reversed. Throws CapExceeded past `cap` group elements.
std::vector<HyperplaneId> inverted_hyperplanes(const CubeComplex& c, const HyperplaneStructure& hs,
                                               const std::vector<CubicalAutomorphism>& generators,
                                               std::size_t cap = 10'000);

// ℐ: intersection of the inverted hyperplanes, 0- and 1-skeleton only. A
// vertex per cube whose axes are exactly the inverted set ("cube:k:id"), an
// edge per cube with one more axis. With nothing inverted, ℐ = c.
CubeComplex invariant_locus(const CubeComplex& c, const HyperplaneStructure& hs,
                            const std::vector<CubicalAutomorphism>& generators, std::size_t cap = 10'000);

// Fixed set of the group generated by `generators`. Each fixed cell comes
// from one cell κ of c invariant under every generator: axes whose
// coordinates are forced to 1/2 drop out, the remaining axis orbits become
// diagonals. Fixed ambient vertices and pointwise-fixed ambient edges keep
// their names (and labels); other cells are named "fix:k:id".
struct FixedSet {
  CubeComplex complex;
  std::vector<CellRef> vertex_cells;  // ambient cell per fixed vertex
  std::vector<CellRef> edge_cells;    // ambient cell per fixed edge
  std::map<int, std::vector<CellRef>> cube_cells;  // per dimension >= 2
};
FixedSet fixed_set(const CubeComplex& c, const std::vector<CubicalAutomorphism>& generators);

// Component containing `seed` (a vertex of `fixed`); throws PreconditionError otherwise.
Subcomplex component_of(const CubeComplex& fixed, VertexId seed);

}  // namespace cubecx
