#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cubecx/colouring.hpp"
#include "cubecx/complex.hpp"
#include "cubecx/hyperplanes.hpp"
#include "cubecx/vertex_set.hpp"

namespace cubecx {

// Q = minus ⊔ zero ⊔ plus; zero is a union of hyperplanes, minus/plus are
// vertex sets.
struct Tripartition {
  std::string name;
  std::vector<HyperplaneId> zero;  // ascending
  VertexSet minus;
  VertexSet plus;
  bool operator==(const Tripartition&) const = default;
};

struct DividingPattern {
  SpecialColouring colouring;
  std::vector<Tripartition> partitions;
};

// Requirement (4a) is a vertex pair; (4b) a vertex outside a generalised
// half-carrier C(v^ε).
struct Separation {
  enum class Kind { pair, half_carrier } kind = Kind::pair;
  VertexId x = 0;
  VertexId y = 0;              // pair
  std::size_t colour = 0;      // half_carrier: colour (or hyperplane, for strong divisibility)
  bool plus = true;            // half_carrier: sign ε
  std::string describe(const CubeComplex& c, const std::vector<std::string>& colour_names) const;
};

struct PatternWitness {
  std::string condition;  // "1", "2", "3", "4a", "4b", "colouring"
  std::optional<std::size_t> partition;
  std::string message;
};

struct PatternReport {
  bool colouring_ok = true;  // special and minimal
  bool condition1 = true, condition2 = true, condition3 = true, condition4a = true, condition4b = true;
  std::vector<PatternWitness> witnesses;
  bool ok() const { return colouring_ok && condition1 && condition2 && condition3 && condition4a && condition4b; }
};

// Throws PreconditionError for unknown hyperplanes or mis-sized vertex sets.
PatternReport validate_pattern(const CubeComplex& c, const HyperplaneStructure& hs, const DividingPattern& p);
// Only conditions (1)-(3) for one partition; empty string when fine.
std::string check_partition(const CubeComplex& c, const HyperplaneStructure& hs, const SpecialColouring& col,
                            const Tripartition& t);

// Vertex components of Q minus the given hyperplanes (labels are dense).
std::vector<std::size_t> components_without(const CubeComplex& c, const HyperplaneStructure& hs,
                                            const std::vector<HyperplaneId>& removed);

struct StrongDivisibility {
  bool strongly_divisible = true;
  std::optional<Separation> witness;  // colour field holds the hyperplane id
  std::size_t families = 0;           // maximal independent sets examined
};

// Tests only maximal pairwise-disjoint families (maximal independent sets of
// the crossing graph). A separation of x from C means no vertex of C lies in
// the component of x.
StrongDivisibility is_strongly_divisible(const CubeComplex& c, const HyperplaneStructure& hs,
                                         std::size_t cap = 1'000'000);
// Same question over every pairwise-disjoint family; exponential.
StrongDivisibility strongly_divisible_naive(const CubeComplex& c, const HyperplaneStructure& hs);

enum class Verdict { yes, no, inconclusive };
const char* to_string(Verdict v);

struct DivisibilityCaps {
  std::size_t colourings = 1'000'000;  // partitions examined by the colouring enumeration
  std::size_t zero_sets = 1'000'000;   // independent sets of Γ per colouring
  std::size_t independent_sets = 1'000'000;
};

struct DivisibilityResult {
  Verdict verdict = Verdict::no;
  std::optional<DividingPattern> pattern;
  std::size_t colourings_examined = 0;
  std::string note;
};

// Decides whether `c` admits a dividing pattern for a given colouring.
// Returns the pattern, or nullopt. Throws CapExceeded.
std::optional<DividingPattern> pattern_for_colouring(const CubeComplex& c, const HyperplaneStructure& hs,
                                                     const SpecialColouring& col,
                                                     const DivisibilityCaps& caps = {});
// Pattern for the standard colouring built from separating families, when
// c is strongly divisible.
std::optional<DividingPattern> strong_pattern(const CubeComplex& c, const HyperplaneStructure& hs,
                                              std::size_t cap = 1'000'000);
DivisibilityResult decide_divisible_exhaustive(const CubeComplex& c, const HyperplaneStructure& hs,
                                               const DivisibilityCaps& caps = {});

bool transverse(const Tripartition& a, const Tripartition& b);

struct ColourTransversality {
  bool transverse = false;
  bool via_crossing = false;  // a hyperplane of the colour crosses one in zero
  bool via_split = false;     // two hyperplanes of the colour have carriers on opposite sides
};
ColourTransversality transverse_colour(const HyperplaneStructure& hs, const SpecialColouring& col,
                                       const Tripartition& t, std::size_t colour);

// Γ plus one vertex per partition (named after it).
SimplicialGraph extended_crossing_graph(const HyperplaneStructure& hs, const DividingPattern& p);

}  // namespace cubecx
