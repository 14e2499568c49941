#include "cubecx/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cubecx {

std::string ValidationReport::summary() const {
  if (violations.empty()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].kind << ": " << violations[i].message;
    if (i == 4 && violations.size() > 5) {
      os << "; ... (" << violations.size() - 5 << " more)";
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- CubeComplex

std::size_t CubeComplex::num_cells(int k) const {
  if (k == 0) return num_vertices();
  if (k == 1) return num_edges();
  if (k < 0 || static_cast<std::size_t>(k) >= cubes_.size()) return 0;
  return cubes_[k].size();
}

int CubeComplex::dimension() const {
  for (int k = static_cast<int>(cubes_.size()) - 1; k >= 2; --k)
    if (!cubes_[k].empty()) return k;
  if (num_edges()) return 1;
  return num_vertices() ? 0 : -1;
}

std::optional<VertexId> CubeComplex::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

VertexId CubeComplex::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw PreconditionError("unknown vertex '" + name + "'");
  return *v;
}

std::optional<DartId> CubeComplex::find_dart(const std::string& name) const {
  auto it = dart_index_.find(name);
  if (it == dart_index_.end()) return std::nullopt;
  return it->second;
}

DartId CubeComplex::dart(const std::string& name) const {
  auto d = find_dart(name);
  if (!d) throw PreconditionError("unknown dart '" + name + "'");
  return *d;
}

bool CubeComplex::has_labels() const {
  return std::any_of(dart_label_.begin(), dart_label_.end(), [](auto& l) { return l.has_value(); });
}

std::optional<DartId> CubeComplex::dart_with_label(VertexId v, const std::string& label) const {
  for (auto d : darts_at_[v])
    if (dart_label_[d] && *dart_label_[d] == label) return d;
  return std::nullopt;
}

const std::vector<CubeFrame>& CubeComplex::cubes(int k) const {
  static const std::vector<CubeFrame> empty;
  if (k < 2 || static_cast<std::size_t>(k) >= cubes_.size()) return empty;
  return cubes_[k];
}

CubeFrame CubeComplex::cell_frame(int k, CellId id) const {
  if (k == 0) return CubeFrame::vertex(id);
  if (k == 1) return CubeFrame::edge(2 * id, origin(2 * id), terminus(2 * id));
  return cubes(k).at(id);
}

std::optional<CellId> CubeComplex::find_cell(const CubeFrame& f) const {
  const int k = f.dim();
  if (k == 0) {
    if (f.corner(0) < num_vertices()) return f.corner(0);
    return std::nullopt;
  }
  if (k == 1) {
    auto d = f.away(0, 0);
    if (d < num_darts() && origin(d) == f.corner(0)) return edge_of(d);
    return std::nullopt;
  }
  if (static_cast<std::size_t>(k) >= keys_.size()) return std::nullopt;
  auto it = keys_[k].find(f.key());
  if (it == keys_[k].end()) return std::nullopt;
  return it->second;
}

std::vector<CellId> CubeComplex::faces(int k, CellId id) const {
  std::vector<CellId> out;
  if (k == 1) return {origin(2 * id), terminus(2 * id)};
  const auto& f = cube(k, id);
  for (int a = 0; a < k; ++a)
    for (int s = 0; s < 2; ++s) {
      auto c = find_cell(f.face(a, s));
      if (!c) throw InternalConsistencyError("missing face of a cube");
      out.push_back(*c);
    }
  return out;
}

std::span<const std::pair<CellId, std::uint32_t>> CubeComplex::corners_with(
    int k, const std::vector<DartId>& sorted_darts) const {
  if (k < 2 || static_cast<std::size_t>(k) >= corners_.size()) return {};
  auto it = corners_[k].find(sorted_darts);
  if (it == corners_[k].end()) return {};
  return it->second;
}

long CubeComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= std::max(1, dimension()); ++k)
    chi += (k % 2 ? -1 : 1) * static_cast<long>(num_cells(k));
  return chi;
}

CubeComplex CubeComplex::with_labels(std::vector<std::optional<std::string>> labels) const {
  if (labels.size() != num_darts()) throw PreconditionError("label vector has wrong size");
  CubeComplex c = *this;
  c.dart_label_ = std::move(labels);
  return c;
}

// ------------------------------------------------------------- ComplexBuilder

VertexId ComplexBuilder::add_vertex(const std::string& name) {
  if (c_.vertex_index_.count(name)) throw PreconditionError("duplicate vertex '" + name + "'");
  auto id = static_cast<VertexId>(c_.vertex_names_.size());
  c_.vertex_names_.push_back(name);
  c_.vertex_index_.emplace(name, id);
  c_.darts_at_.emplace_back();
  return id;
}

DartId ComplexBuilder::add_edge(VertexId origin, VertexId terminus, const std::string& forward_name,
                                const std::string& reverse_name,
                                std::optional<std::string> forward_label,
                                std::optional<std::string> reverse_label) {
  if (origin >= c_.num_vertices() || terminus >= c_.num_vertices())
    throw PreconditionError("edge endpoint out of range");
  std::string rname = reverse_name.empty() ? forward_name + "~" : reverse_name;
  if (rname == forward_name || c_.dart_index_.count(forward_name) || c_.dart_index_.count(rname))
    throw PreconditionError("duplicate dart name '" + forward_name + "'");
  auto d = static_cast<DartId>(c_.dart_names_.size());
  c_.dart_names_.push_back(forward_name);
  c_.dart_names_.push_back(rname);
  c_.dart_index_.emplace(forward_name, d);
  c_.dart_index_.emplace(rname, d + 1);
  c_.dart_origin_.push_back(origin);
  c_.dart_origin_.push_back(terminus);
  c_.dart_label_.push_back(std::move(forward_label));
  c_.dart_label_.push_back(std::move(reverse_label));
  auto insert_sorted = [](std::vector<DartId>& v, DartId x) {
    v.insert(std::upper_bound(v.begin(), v.end(), x), x);
  };
  insert_sorted(c_.darts_at_[origin], d);
  insert_sorted(c_.darts_at_[terminus], d + 1);
  return d;
}

void ComplexBuilder::set_label(DartId d, std::optional<std::string> label) {
  c_.dart_label_.at(d) = std::move(label);
}

void ComplexBuilder::check_frame(const CubeFrame& f) const {
  const int k = f.dim();
  for (std::size_t c = 0; c < f.num_corners(); ++c) {
    if (f.corner(c) >= c_.num_vertices()) throw InternalConsistencyError("frame vertex out of range");
    for (int i = 0; i < k; ++i) {
      auto d = f.away(c, i);
      if (d >= c_.num_darts()) throw InternalConsistencyError("frame dart out of range");
      if (c_.origin(d) != f.corner(c))
        throw InternalConsistencyError("frame dart '" + c_.dart_name(d) + "' does not leave its corner");
      if (f.away(c ^ (std::size_t{1} << i), i) != (d ^ 1u))
        throw InternalConsistencyError("frame edges along an axis do not pair up");
    }
  }
}

std::pair<CellId, bool> ComplexBuilder::add_cube(const CubeFrame& f) {
  const int k = f.dim();
  if (k < 2) {
    auto id = c_.find_cell(f);
    if (!id) throw InternalConsistencyError("low-dimensional cell not present");
    return {*id, false};
  }
  check_frame(f);
  if (c_.cubes_.size() <= static_cast<std::size_t>(k)) {
    c_.cubes_.resize(k + 1);
    c_.keys_.resize(k + 1);
    c_.corners_.resize(k + 1);
  }
  auto key = f.key();
  if (auto it = c_.keys_[k].find(key); it != c_.keys_[k].end()) return {it->second, false};
  if (k >= 3)
    for (int a = 0; a < k; ++a)
      for (int s = 0; s < 2; ++s) add_cube(f.face(a, s));
  auto id = static_cast<CellId>(c_.cubes_[k].size());
  c_.cubes_[k].push_back(f);
  c_.keys_[k].emplace(std::move(key), id);
  for (std::size_t c = 0; c < f.num_corners(); ++c)
    c_.corners_[k][f.corner_darts(c)].emplace_back(id, static_cast<std::uint32_t>(c));
  return {id, true};
}

std::pair<CellId, bool> ComplexBuilder::add_square(const std::array<DartId, 4>& loop) {
  for (int i = 0; i < 4; ++i)
    if (c_.terminus(loop[i]) != c_.origin(loop[(i + 1) % 4]))
      throw InternalConsistencyError("square loop does not close");
  return add_cube(CubeFrame::square(loop, c_.dart_origin_));
}

std::optional<CubeFrame> ComplexBuilder::lookup_corner(int k, VertexId v,
                                                       std::span<const DartId> darts) const {
  if (k == 1) {
    if (c_.origin(darts[0]) != v) return std::nullopt;
    return CubeFrame::edge(darts[0], v, c_.terminus(darts[0]));
  }
  std::vector<DartId> sorted(darts.begin(), darts.end());
  std::sort(sorted.begin(), sorted.end());
  auto hits = c_.corners_with(k, sorted);
  if (hits.empty()) return std::nullopt;
  if (hits.size() > 1) {
    std::string names;
    for (auto d : sorted) names += " " + c_.dart_name(d);
    throw AmbiguousFill("germs{" + names + " } at vertex '" + c_.vertex_name(v) + "' span " +
                        std::to_string(hits.size()) + " distinct " + std::to_string(k) + "-cubes");
  }
  auto [id, corner] = hits.front();
  const auto& f = c_.cube(k, id);
  if (f.corner(corner) != v) return std::nullopt;
  std::vector<int> perm(k, -1);
  for (int j = 0; j < k; ++j)
    for (int a = 0; a < k; ++a)
      if (f.away(corner, a) == darts[j]) perm[j] = a;
  return f.reoriented(corner, perm);
}

std::optional<CubeFrame> ComplexBuilder::assemble(VertexId v, std::span<const DartId> darts) const {
  const int k = static_cast<int>(darts.size());
  for (auto d : darts)
    if (c_.origin(d) != v) return std::nullopt;
  {
    std::set<DartId> distinct(darts.begin(), darts.end());
    if (static_cast<int>(distinct.size()) != k) return std::nullopt;
  }
  if (k == 0) return CubeFrame::vertex(v);
  if (k <= 2) return lookup_corner(k, v, darts);

  const std::size_t n = std::size_t{1} << k;
  std::vector<VertexId> corners(n, kNone);
  std::vector<DartId> aw(n * k, kNone);
  auto place = [&](const CubeFrame& face, int missing, int side) {
    const std::size_t low = (std::size_t{1} << missing) - 1;
    for (std::size_t s = 0; s < face.num_corners(); ++s) {
      std::size_t t = (s & low) | ((s & ~low) << 1) | (static_cast<std::size_t>(side) << missing);
      if (corners[t] == kNone)
        corners[t] = face.corner(s);
      else if (corners[t] != face.corner(s))
        return false;
      for (int jj = 0; jj < k - 1; ++jj) {
        int j = jj < missing ? jj : jj + 1;
        auto& slot = aw[t * k + j];
        if (slot == kNone)
          slot = face.away(s, jj);
        else if (slot != face.away(s, jj))
          return false;
      }
    }
    return true;
  };
  std::vector<DartId> sub;
  for (int i = 0; i < k; ++i) {
    sub.clear();
    for (int j = 0; j < k; ++j)
      if (j != i) sub.push_back(darts[j]);
    auto f = lookup_corner(k - 1, v, sub);
    if (!f || !place(*f, i, 0)) return std::nullopt;
  }
  for (int i = 0; i < k; ++i) {
    std::size_t ci = std::size_t{1} << i;
    sub.clear();
    for (int j = 0; j < k; ++j)
      if (j != i) {
        if (aw[ci * k + j] == kNone) return std::nullopt;
        sub.push_back(aw[ci * k + j]);
      }
    auto f = lookup_corner(k - 1, corners[ci], sub);
    if (!f || !place(*f, i, 1)) return std::nullopt;
  }
  if (std::find(corners.begin(), corners.end(), kNone) != corners.end()) return std::nullopt;
  if (std::find(aw.begin(), aw.end(), kNone) != aw.end()) return std::nullopt;
  CubeFrame frame(k, std::move(corners), std::move(aw));
  try {
    check_frame(frame);
  } catch (const InternalConsistencyError&) {
    return std::nullopt;
  }
  return frame;
}

std::size_t ComplexBuilder::flag_fill() {
  std::size_t added = 0;
  for (int k = 3;; ++k) {
    if (c_.corners_.size() <= static_cast<std::size_t>(k - 1) || c_.cubes_[k - 1].empty()) break;
    // Snapshot the (k-1)-corners; new k-cubes do not create (k-1)-corners.
    std::vector<std::vector<DartId>> simplices;
    for (const auto& [darts, hits] : c_.corners_[k - 1]) simplices.push_back(darts);
    for (const auto& sigma : simplices) {
      VertexId v = c_.origin(sigma.front());
      for (auto g : c_.darts_at(v)) {
        if (g <= sigma.back()) continue;
        std::vector<DartId> t = sigma;
        t.push_back(g);
        bool all_faces = true;
        for (int drop = 0; drop < k - 1 && all_faces; ++drop) {
          std::vector<DartId> face;
          for (int j = 0; j < k; ++j)
            if (j != drop) face.push_back(t[j]);
          all_faces = !c_.corners_with(k - 1, face).empty();
        }
        if (!all_faces) continue;
        if (!c_.corners_with(k, t).empty()) continue;
        auto frame = assemble(v, t);
        if (frame && add_cube(*frame).second) ++added;
      }
    }
  }
  return added;
}

CubeComplex ComplexBuilder::build() const {
  ValidationReport report;
  if (c_.corners_.size() > 2)
    for (const auto& [darts, hits] : c_.corners_[2])
      if (hits.size() > 1) {
        Violation v{"square_germ_pair", "germs " + c_.dart_name(darts[0]) + ", " + c_.dart_name(darts[1]) +
                                            " span more than one square", {}};
        for (auto [id, corner] : hits) v.cells.push_back("square " + std::to_string(id));
        report.violations.push_back(std::move(v));
      }
  if (!report.ok()) throw InvalidComplex(std::move(report));
  return c_;
}

// ------------------------------------------------------------ raw encoding

namespace {

std::optional<CubeComplex> parse_raw(const RawComplex& raw, ValidationReport& report) {
  auto bad = [&](std::string kind, std::string msg, std::vector<std::string> cells) {
    report.violations.push_back({std::move(kind), std::move(msg), std::move(cells)});
  };
  ComplexBuilder b;
  std::set<std::string> seen;
  for (const auto& v : raw.vertices) {
    if (!seen.insert(v).second) {
      bad("duplicate_id", "vertex '" + v + "' listed twice", {v});
      continue;
    }
    b.add_vertex(v);
  }
  std::unordered_map<std::string, std::size_t> dart_pos;
  for (std::size_t i = 0; i < raw.darts.size(); ++i)
    if (!dart_pos.emplace(raw.darts[i].id, i).second)
      bad("duplicate_id", "dart '" + raw.darts[i].id + "' listed twice", {raw.darts[i].id});
  bool darts_ok = report.ok();
  for (const auto& d : raw.darts) {
    if (!b.view().find_vertex(d.origin)) {
      bad("unknown_vertex", "dart '" + d.id + "' has unknown origin '" + d.origin + "'", {d.id});
      darts_ok = false;
    }
    auto r = dart_pos.find(d.reverse);
    if (r == dart_pos.end()) {
      bad("involution", "reverse '" + d.reverse + "' of dart '" + d.id + "' is missing", {d.id});
      darts_ok = false;
    } else if (d.reverse == d.id) {
      bad("involution", "dart '" + d.id + "' is its own reverse", {d.id});
      darts_ok = false;
    } else if (raw.darts[r->second].reverse != d.id) {
      bad("involution", "reverse of reverse of '" + d.id + "' is not '" + d.id + "'", {d.id, d.reverse});
      darts_ok = false;
    }
  }
  if (!darts_ok) return std::nullopt;
  std::vector<char> done(raw.darts.size(), 0);
  for (std::size_t i = 0; i < raw.darts.size(); ++i) {
    if (done[i]) continue;
    const auto& d = raw.darts[i];
    std::size_t j = dart_pos.at(d.reverse);
    const auto& r = raw.darts[j];
    done[i] = done[j] = 1;
    b.add_edge(b.view().vertex(d.origin), b.view().vertex(r.origin), d.id, r.id, d.germ_label,
               r.germ_label);
  }
  const CubeComplex& c = b.view();

  std::vector<std::optional<CellId>> prev_ids;  // raw index -> internal id, previous dim
  for (std::size_t i = 0; i < raw.squares.size(); ++i) {
    const auto& sq = raw.squares[i];
    std::string tag = "square " + std::to_string(i);
    std::array<DartId, 4> loop{};
    bool ok = true;
    for (int j = 0; j < 4; ++j) {
      auto d = c.find_dart(sq[j]);
      if (!d) {
        bad("unknown_dart", tag + " uses unknown dart '" + sq[j] + "'", {tag});
        ok = false;
      } else {
        loop[j] = *d;
      }
    }
    if (ok)
      for (int j = 0; j < 4; ++j)
        if (c.terminus(loop[j]) != c.origin(loop[(j + 1) % 4])) {
          bad("square_not_closed", tag + ": '" + sq[j] + "' does not end where '" + sq[(j + 1) % 4] + "' starts",
              {tag});
          ok = false;
          break;
        }
    if (!ok) {
      prev_ids.emplace_back();
      continue;
    }
    auto frame = CubeFrame::square(loop, c.dart_origins());
    if (auto dup = c.find_cell(frame)) {
      bad("duplicate_cell", tag + " repeats square " + std::to_string(*dup), {tag});
      prev_ids.emplace_back(*dup);
      continue;
    }
    for (std::size_t corner = 0; corner < 4; ++corner)
      if (!c.corners_with(2, frame.corner_darts(corner)).empty()) {
        bad("square_germ_pair", tag + " shares a germ pair at '" + c.vertex_name(frame.corner(corner)) +
                                    "' with another square", {tag});
        ok = false;
        break;
      }
    if (!ok) {
      prev_ids.emplace_back();
      continue;
    }
    prev_ids.emplace_back(b.add_cube(frame).first);
  }

  for (const auto& [k, list] : raw.cubes) {
    if (k < 3) {
      bad("bad_dimension", "cube list for dimension " + std::to_string(k), {});
      continue;
    }
    if (raw.cubes.find(k - 1) == raw.cubes.end() && k > 3) {
      bad("cube_face_unknown", "no " + std::to_string(k - 1) + "-cubes for " + std::to_string(k) + "-cube faces", {});
      break;
    }
    std::vector<std::optional<CellId>> ids;
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string tag = std::to_string(k) + "-cube " + std::to_string(i);
      const auto& faces = list[i];
      bool ok = faces.size() == static_cast<std::size_t>(2 * k);
      if (!ok) bad("cube_face_count", tag + " lists " + std::to_string(faces.size()) + " faces", {tag});
      std::vector<std::vector<std::uint32_t>> want;
      for (auto f : faces) {
        if (!ok) break;
        if (f < 0 || static_cast<std::size_t>(f) >= prev_ids.size() || !prev_ids[f]) {
          bad("cube_face_unknown", tag + " has unknown face " + std::to_string(f), {tag});
          ok = false;
          break;
        }
        want.push_back(c.cube(k - 1, *prev_ids[f]).key());
      }
      if (!ok) {
        ids.emplace_back();
        continue;
      }
      std::sort(want.begin(), want.end());
      const auto& base = c.cube(k - 1, *prev_ids[faces[0]]);
      auto darts = base.base_darts();
      std::optional<CubeFrame> found;
      try {
        for (auto u : c.darts_at(base.corner(0))) {
          if (std::find(darts.begin(), darts.end(), u) != darts.end()) continue;
          auto trial = darts;
          trial.push_back(u);
          auto frame = b.assemble(base.corner(0), trial);
          if (!frame) continue;
          std::vector<std::vector<std::uint32_t>> got;
          for (int a = 0; a < k; ++a)
            for (int s = 0; s < 2; ++s) got.push_back(frame->face(a, s).key());
          std::sort(got.begin(), got.end());
          if (got == want) {
            found = frame;
            break;
          }
        }
      } catch (const AmbiguousFill& e) {
        bad("cube_not_assembled", tag + ": " + e.what(), {tag});
        ids.emplace_back();
        continue;
      }
      if (!found) {
        bad("cube_not_assembled", tag + " faces do not assemble into a cube", {tag});
        ids.emplace_back();
        continue;
      }
      if (auto dup = c.find_cell(*found)) {
        bad("duplicate_cell", tag + " repeats " + std::to_string(k) + "-cube " + std::to_string(*dup), {tag});
        ids.emplace_back(*dup);
        continue;
      }
      ids.emplace_back(b.add_cube(*found).first);
    }
    prev_ids = std::move(ids);
  }
  if (!report.ok()) return std::nullopt;
  return b.build();
}

}  // namespace

ValidationReport validate_complex(const RawComplex& raw) {
  ValidationReport report;
  parse_raw(raw, report);
  return report;
}

ValidationReport validate_complex(const CubeComplex& c) { return validate_complex(to_raw(c)); }

CubeComplex from_raw(const RawComplex& raw) {
  ValidationReport report;
  auto c = parse_raw(raw, report);
  if (!c) throw InvalidComplex(std::move(report));
  return std::move(*c);
}

RawComplex to_raw(const CubeComplex& c) {
  RawComplex raw;
  for (VertexId v = 0; v < c.num_vertices(); ++v) raw.vertices.push_back(c.vertex_name(v));
  for (DartId d = 0; d < c.num_darts(); ++d)
    raw.darts.push_back({c.dart_name(d), c.vertex_name(c.origin(d)), c.dart_name(d ^ 1u), c.label(d)});
  for (const auto& f : c.cubes(2)) {
    auto l = f.square_loop();
    raw.squares.push_back({c.dart_name(l[0]), c.dart_name(l[1]), c.dart_name(l[2]), c.dart_name(l[3])});
  }
  for (int k = 3; k <= c.dimension(); ++k) {
    auto& list = raw.cubes[k];
    for (CellId id = 0; id < c.num_cells(k); ++id) {
      std::vector<long> faces;
      for (auto f : c.faces(k, id)) faces.push_back(static_cast<long>(f));
      std::sort(faces.begin(), faces.end());  // order carries nothing; keep output canonical
      list.push_back(std::move(faces));
    }
  }
  return raw;
}

}  // namespace cubecx
