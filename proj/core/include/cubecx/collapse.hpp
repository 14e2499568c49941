#pragma once

#include <span>
#include <string>
#include <vector>

#include "cubecx/complex.hpp"
#include "cubecx/cubical_map.hpp"

namespace cubecx {

class NotCarrierRetract : public Error {
 public:
  NotCarrierRetract(std::string hyperplane, std::string detail)
      : Error("hyperplane '" + hyperplane + "' is not a carrier retract: " + detail), hyperplane_(std::move(hyperplane)) {}
  const std::string& hyperplane() const { return hyperplane_; }

 private:
  std::string hyperplane_;
};

struct CollapseResult {
  CubeComplex complex;
  CubicalMap quotient;  // input -> result; crushed darts map to kNone
};

// Collapses the given hyperplanes (ids of `c`) one at a time, in order.
CollapseResult collapse(const CubeComplex& c, std::span<const HyperplaneId> hyperplanes);

}  // namespace cubecx
