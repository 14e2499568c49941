#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "cubecx/colouring.hpp"
#include "cubecx/complex.hpp"
#include "cubecx/cubical_map.hpp"
#include "cubecx/divisibility.hpp"
#include "cubecx/graph.hpp"
#include "cubecx/host.hpp"

namespace cubecx::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaMajor = 1;
inline constexpr const char* kSchema = "cubecx/1";

// {"schema": "cubecx/1", "type": type}. check_document throws FormatError on
// a missing or foreign schema, a newer major, or the wrong type (empty
// `type` accepts any).
Json document(const std::string& type);
std::string check_document(const Json& j, const std::string& type = {});

// Plain cell data: vertices, darts {id, origin, reverse, label?}, squares as
// dart 4-tuples, cubes by dimension as face-id lists.
Json complex_json(const CubeComplex& c);
CubeComplex complex_from_json(const Json& j);  // throws FormatError / InvalidComplex

Json graph_json(const SimplicialGraph& g);
SimplicialGraph graph_from_json(const Json& j);

// Colour classes keyed by hyperplane name; "plus" names a dart pointing
// along the v+ orientation.
Json colouring_json(const CubeComplex& c, const HyperplaneStructure& hs, const SpecialColouring& col);
SpecialColouring colouring_from_json(const Json& j, const CubeComplex& c, const HyperplaneStructure& hs);

// Partitions: zero as hyperplane names, minus/plus as vertex names.
Json pattern_json(const CubeComplex& c, const HyperplaneStructure& hs, const DividingPattern& p);
DividingPattern pattern_from_json(const Json& j, const CubeComplex& c, const HyperplaneStructure& hs);

Json automorphism_json(const CubeComplex& c, const CubicalAutomorphism& g);
CubicalAutomorphism automorphism_from_json(const Json& j, const CubeComplex& c);

// A complex document, optionally carrying a colouring and a pattern.
struct ComplexDocument {
  std::string name;
  CubeComplex complex;
  std::optional<SpecialColouring> colouring;
  std::optional<DividingPattern> pattern;
};
Json complex_document(const ComplexDocument& d);
ComplexDocument complex_document_from_json(const Json& j);

// Host bundles store their inputs (base, pattern, options, N) plus the
// built host; reading rebuilds and rejects a stored host that differs.
Json host_json(const HostBundle& b);
HostBundle host_from_json(const Json& j);

Json read_json(const std::filesystem::path& path);  // throws FormatError
// Write to a sibling temp file, then rename over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& text);

struct DotOptions {
  std::string name = "G";
  bool colour_classes = true;  // colour edges by label letter
};
// Deterministic DOT. Graphs become an undirected-looking digraph; complexes
// export their 1-skeleton with germ labels as tail/head labels.
std::string export_dot(const SimplicialGraph& g, const DotOptions& opts = {});
std::string export_dot(const CubeComplex& c, const DotOptions& opts = {});

}  // namespace cubecx::io
