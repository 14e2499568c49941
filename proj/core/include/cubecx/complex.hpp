#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubecx/cube_frame.hpp"
#include "cubecx/types.hpp"

namespace cubecx {

// Cell reference: dimension plus id within that dimension. Dimension 0 ids
// are vertices, dimension 1 ids are edges, higher ids index cubes(k).
struct CellRef {
  int dim = 0;
  CellId id = 0;
  auto operator<=>(const CellRef&) const = default;
};

// The file-level encoding: names everywhere, squares as dart loops, higher
// cubes as lists of face indices into the previous dimension.
struct RawDart {
  std::string id;
  std::string origin;
  std::string reverse;
  std::optional<std::string> germ_label;
};

struct RawComplex {
  std::vector<std::string> vertices;
  std::vector<RawDart> darts;
  std::vector<std::array<std::string, 4>> squares;
  std::map<int, std::vector<std::vector<long>>> cubes;  // k >= 3
};

struct Violation {
  std::string kind;  // "involution", "unknown_vertex", "square_not_closed", ...
  std::string message;
  std::vector<std::string> cells;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

class InvalidComplex : public Error {
 public:
  explicit InvalidComplex(ValidationReport report)
      : Error("invalid cube complex: " + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

class AmbiguousFill : public Error {
 public:
  using Error::Error;
};

class ComplexBuilder;

// Immutable, validated cube complex. Dart d and reverse(d) = d ^ 1 form edge d >> 1.
class CubeComplex {
 public:
  CubeComplex() = default;

  std::size_t num_vertices() const { return vertex_names_.size(); }
  std::size_t num_darts() const { return dart_names_.size(); }
  std::size_t num_edges() const { return dart_names_.size() / 2; }
  // Number of k-cells (k = 0 vertices, k = 1 edges).
  std::size_t num_cells(int k) const;
  int dimension() const;

  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  VertexId vertex(const std::string& name) const;  // throws PreconditionError

  const std::string& dart_name(DartId d) const { return dart_names_.at(d); }
  std::optional<DartId> find_dart(const std::string& name) const;
  DartId dart(const std::string& name) const;  // throws PreconditionError

  VertexId origin(DartId d) const { return dart_origin_[d]; }
  VertexId terminus(DartId d) const { return dart_origin_[d ^ 1u]; }
  static DartId reverse(DartId d) { return d ^ 1u; }
  static EdgeId edge_of(DartId d) { return d >> 1; }
  const std::vector<VertexId>& dart_origins() const { return dart_origin_; }

  const std::optional<std::string>& label(DartId d) const { return dart_label_[d]; }
  bool has_labels() const;
  std::optional<DartId> dart_with_label(VertexId v, const std::string& label) const;

  // Darts with origin v (germs at v), ascending.
  const std::vector<DartId>& darts_at(VertexId v) const { return darts_at_[v]; }

  const std::vector<CubeFrame>& cubes(int k) const;  // k >= 2
  const CubeFrame& cube(int k, CellId id) const { return cubes(k)[id]; }
  // Frame of any cell, including vertices and edges.
  CubeFrame cell_frame(int k, CellId id) const;
  std::optional<CellId> find_cell(const CubeFrame& f) const;
  // Faces in order (axis 0 side 0, axis 0 side 1, axis 1 side 0, ...).
  std::vector<CellId> faces(int k, CellId id) const;
  // (cube, corner) pairs of k-cubes whose corner has exactly these sorted darts.
  std::span<const std::pair<CellId, std::uint32_t>> corners_with(
      int k, const std::vector<DartId>& sorted_darts) const;

  long euler_characteristic() const;

  // Copy with a new germ labelling (size num_darts()).
  CubeComplex with_labels(std::vector<std::optional<std::string>> labels) const;

 private:
  friend class ComplexBuilder;

  std::vector<std::string> vertex_names_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::vector<std::string> dart_names_;
  std::unordered_map<std::string, DartId> dart_index_;
  std::vector<VertexId> dart_origin_;
  std::vector<std::optional<std::string>> dart_label_;
  std::vector<std::vector<DartId>> darts_at_;
  std::vector<std::vector<CubeFrame>> cubes_;  // index k; 0 and 1 unused
  std::vector<std::map<std::vector<std::uint32_t>, CellId>> keys_;
  std::vector<std::map<std::vector<DartId>, std::vector<std::pair<CellId, std::uint32_t>>>> corners_;
};

// Mutable construction of a CubeComplex. add_cube closes under faces and
// silently merges cells that share a 1-skeleton.
class ComplexBuilder {
 public:
  ComplexBuilder() = default;
  explicit ComplexBuilder(CubeComplex base) : c_(std::move(base)) {}

  VertexId add_vertex(const std::string& name);
  // Returns the forward dart; the reverse is forward ^ 1.
  DartId add_edge(VertexId origin, VertexId terminus, const std::string& forward_name,
                  const std::string& reverse_name = {},
                  std::optional<std::string> forward_label = std::nullopt,
                  std::optional<std::string> reverse_label = std::nullopt);
  void set_label(DartId d, std::optional<std::string> label);
  // Adds a cell of dim >= 2 (lower dims are looked up). Returns (id, inserted).
  std::pair<CellId, bool> add_cube(const CubeFrame& f);
  std::pair<CellId, bool> add_square(const std::array<DartId, 4>& loop);

  // The unique k-cube frame at v spanned by `darts` (axis i along darts[i]),
  // built from already-present (k-1)-cubes. Throws AmbiguousFill if a face
  // corner is realised twice.
  std::optional<CubeFrame> assemble(VertexId v, std::span<const DartId> darts) const;
  // Adds every cube of dim >= 3 whose faces are present, to a fixed point.
  std::size_t flag_fill();

  const CubeComplex& view() const { return c_; }
  CubeComplex build() const;  // validates; throws InvalidComplex

 private:
  void check_frame(const CubeFrame& f) const;
  std::optional<CubeFrame> lookup_corner(int k, VertexId v, std::span<const DartId> darts) const;

  CubeComplex c_;
};

// Structural validation of the file-level encoding.
ValidationReport validate_complex(const RawComplex& raw);
// Re-check of an in-memory complex (round-trips through the raw encoding).
ValidationReport validate_complex(const CubeComplex& c);

CubeComplex from_raw(const RawComplex& raw);  // throws InvalidComplex
RawComplex to_raw(const CubeComplex& c);

}  // namespace cubecx
