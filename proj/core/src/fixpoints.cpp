#include "cubecx/fixpoints.hpp"

#include <algorithm>
#include <set>

#include "union_find.hpp"

namespace cubecx {

std::vector<HyperplaneId> inverted_hyperplanes(const CubeComplex& c, const HyperplaneStructure& hs,
                                               const std::vector<CubicalAutomorphism>& generators,
                                               std::size_t cap) {
  auto group = group_closure(c, generators, cap);
  std::vector<char> inv(hs.size(), 0);
  for (const auto& g : group)
    for (HyperplaneId h = 0; h < hs.size(); ++h) {
      if (inv[h] || !hs.orientable(h)) continue;
      DartId d = 2 * hs[h].edges.front();
      DartId e = g.dart(d);
      if (hs.of_dart(e) == h && hs.sign(e) == -hs.sign(d)) inv[h] = 1;
    }
  std::vector<HyperplaneId> out;
  for (HyperplaneId h = 0; h < hs.size(); ++h)
    if (inv[h]) out.push_back(h);
  return out;
}

CubeComplex invariant_locus(const CubeComplex& c, const HyperplaneStructure& hs,
                            const std::vector<CubicalAutomorphism>& generators, std::size_t cap) {
  auto inv = inverted_hyperplanes(c, hs, generators, cap);
  if (inv.empty()) return c;
  const int m = static_cast<int>(inv.size());
  auto axes = [&](const CubeFrame& f) {
    std::vector<HyperplaneId> a;
    for (int i = 0; i < f.dim(); ++i) a.push_back(hs.axis(f, i));
    std::sort(a.begin(), a.end());
    return a;
  };
  ComplexBuilder b;
  std::map<CellId, VertexId> vertex_of;
  if (m <= c.dimension())
    for (CellId id = 0; id < c.num_cells(m); ++id)
      if (axes(c.cell_frame(m, id)) == inv)
        vertex_of[id] = b.add_vertex("cube:" + std::to_string(m) + ":" + std::to_string(id));
  if (m + 1 <= c.dimension())
    for (CellId id = 0; id < c.num_cells(m + 1); ++id) {
      auto f = c.cell_frame(m + 1, id);
      auto a = axes(f);
      if (!std::includes(a.begin(), a.end(), inv.begin(), inv.end())) continue;
      int extra = -1;
      for (int i = 0; i <= m; ++i)
        if (!std::binary_search(inv.begin(), inv.end(), hs.axis(f, i))) extra = i;
      if (extra < 0) continue;
      auto lo = c.find_cell(f.face(extra, 0)), hi = c.find_cell(f.face(extra, 1));
      if (!lo || !hi) throw InternalConsistencyError("face of an invariant cube is missing");
      auto name = "cube:" + std::to_string(m + 1) + ":" + std::to_string(id);
      b.add_edge(vertex_of.at(*lo), vertex_of.at(*hi), name);
    }
  return b.build();
}

namespace {

struct Invariant {
  CellRef cell;
  std::vector<int> inverted;             // axes with coordinate 1/2
  std::vector<std::vector<int>> orbits;  // consistent axis orbits, by least axis
  std::vector<int> orbit_of;             // per axis, -1 when inverted
  std::vector<unsigned> offset;          // per axis, relative to the orbit's least axis
  std::uint32_t fix_id = kNone;          // vertex or edge id in the fixed set
};

std::optional<Invariant> analyse(const CubeComplex& c, int k, CellId id, const std::vector<CubicalAutomorphism>& gens) {
  auto f = c.cell_frame(k, id);
  detail::ParityUnionFind uf(static_cast<std::size_t>(k));
  std::vector<int> conflict;
  for (const auto& g : gens) {
    auto gf = g.apply(f);
    auto img = c.find_cell(gf);
    if (!img || *img != id) return std::nullopt;
    auto s = find_symmetry(f, gf);
    if (!s) throw InternalConsistencyError("invariant cell without a frame symmetry");
    for (int j = 0; j < k; ++j) {
      int pj = s->perm[j];
      if (!uf.unite(j, pj, static_cast<int>((s->flip >> pj) & 1u))) conflict.push_back(j);
    }
  }
  Invariant inv;
  inv.cell = {k, id};
  std::set<std::size_t> bad;
  for (int j : conflict) bad.insert(uf.find(j).first);
  inv.orbit_of.assign(k, -1);
  inv.offset.assign(k, 0);
  std::map<std::size_t, int> orbit_index;
  for (int a = 0; a < k; ++a) {
    auto [root, par] = uf.find(a);
    if (bad.count(root)) {
      inv.inverted.push_back(a);
      continue;
    }
    auto it = orbit_index.find(root);
    if (it == orbit_index.end()) {
      it = orbit_index.emplace(root, static_cast<int>(inv.orbits.size())).first;
      inv.orbits.emplace_back();
    }
    inv.orbits[it->second].push_back(a);
    inv.orbit_of[a] = it->second;
  }
  for (const auto& o : inv.orbits) {
    int base = uf.find(o.front()).second;
    for (int a : o) inv.offset[a] = static_cast<unsigned>(uf.find(a).second ^ base);
  }
  return inv;
}

}  // namespace

FixedSet fixed_set(const CubeComplex& c, const std::vector<CubicalAutomorphism>& generators) {
  std::vector<Invariant> cells;
  std::map<CellRef, std::size_t> index;
  for (int k = 0; k <= c.dimension(); ++k)
    for (CellId id = 0; id < c.num_cells(k); ++id)
      if (auto inv = analyse(c, k, id, generators)) {
        index[{k, id}] = cells.size();
        cells.push_back(std::move(*inv));
      }

  auto lookup = [&](const CubeFrame& sub) -> Invariant& {
    auto id = c.find_cell(sub);
    auto it = id ? index.find({sub.dim(), *id}) : index.end();
    if (it == index.end()) throw InternalConsistencyError("face of an invariant cell is not invariant");
    return cells[it->second];
  };
  // Face of κ with the inverted axes and the orbits in `keep` free, other
  // orbits pinned at corner T.
  auto face = [&](const Invariant& inv, const CubeFrame& f, std::size_t t, const std::vector<int>& keep) {
    std::vector<int> free = inv.inverted;
    std::size_t pinned = 0;
    for (std::size_t b = 0; b < inv.orbits.size(); ++b) {
      bool kept = std::find(keep.begin(), keep.end(), static_cast<int>(b)) != keep.end();
      for (int a : inv.orbits[b]) {
        if (kept)
          free.push_back(a);
        else if ((((t >> b) & 1u) ^ inv.offset[a]) != 0)
          pinned |= std::size_t{1} << a;
      }
    }
    return f.subframe(free, pinned);
  };

  FixedSet out;
  ComplexBuilder b;
  for (auto& inv : cells) {
    if (!inv.orbits.empty()) continue;
    auto [k, id] = inv.cell;
    inv.fix_id = b.add_vertex(k == 0 ? c.vertex_name(id) : "fix:" + std::to_string(k) + ":" + std::to_string(id));
    out.vertex_cells.push_back(inv.cell);
  }
  // Dart of the fixed edge from face φ leaving the corner of κ at T along orbit ob.
  auto edge_dart = [&](const Invariant& inv, const CubeFrame& f, std::size_t t, int ob) -> DartId {
    auto sub = face(inv, f, t, {ob});
    auto& phi = lookup(sub);
    auto g = c.cell_frame(phi.cell.dim, phi.cell.id);
    auto s = find_symmetry(g, sub);
    if (!s || phi.fix_id == kNone) throw InternalConsistencyError("fixed edge frame mismatch");
    int j = static_cast<int>(inv.inverted.size());  // first orbit axis in the subframe
    int a = inv.orbits[ob].front();
    int i = s->perm[j];
    unsigned start = static_cast<unsigned>((t >> ob) & 1u) ^ inv.offset[a] ^ static_cast<unsigned>((s->flip >> i) & 1u) ^
                     phi.offset[i];
    return start == 0 ? phi.fix_id : phi.fix_id ^ 1u;
  };
  auto corner_vertex = [&](const Invariant& inv, const CubeFrame& f, std::size_t t) {
    auto& v = lookup(face(inv, f, t, {}));
    if (v.fix_id == kNone || !v.orbits.empty()) throw InternalConsistencyError("fixed corner is not a fixed vertex");
    return static_cast<VertexId>(v.fix_id);
  };
  for (auto& inv : cells) {
    if (inv.orbits.size() != 1) continue;
    auto [k, id] = inv.cell;
    auto f = c.cell_frame(k, id);
    auto o = corner_vertex(inv, f, 0), t = corner_vertex(inv, f, 1);
    DartId d;
    if (k == 1) {
      d = b.add_edge(o, t, c.dart_name(2 * id), c.dart_name(2 * id + 1), c.label(2 * id), c.label(2 * id + 1));
    } else {
      auto name = "fix:" + std::to_string(k) + ":" + std::to_string(id);
      d = b.add_edge(o, t, name, name + "~");
    }
    inv.fix_id = d;
    out.edge_cells.push_back(inv.cell);
  }
  std::size_t top = 0;
  for (const auto& inv : cells) top = std::max(top, inv.orbits.size());
  for (std::size_t dim = 2; dim <= top; ++dim)
    for (auto& inv : cells) {
      if (inv.orbits.size() != dim) continue;
      auto f = c.cell_frame(inv.cell.dim, inv.cell.id);
      const std::size_t n = std::size_t{1} << dim;
      std::vector<VertexId> corners(n);
      std::vector<DartId> away(n * dim);
      for (std::size_t t = 0; t < n; ++t) {
        corners[t] = corner_vertex(inv, f, t);
        for (std::size_t ob = 0; ob < dim; ++ob) away[t * dim + ob] = edge_dart(inv, f, t, static_cast<int>(ob));
      }
      auto [cid, inserted] = b.add_cube(CubeFrame(static_cast<int>(dim), std::move(corners), std::move(away)));
      if (!inserted) continue;
      auto& v = out.cube_cells[static_cast<int>(dim)];
      if (v.size() <= cid) v.resize(cid + 1);
      v[cid] = inv.cell;
    }
  out.complex = b.build();
  return out;
}

Subcomplex component_of(const CubeComplex& fixed, VertexId seed) {
  if (seed >= fixed.num_vertices()) throw PreconditionError("seed is not a vertex of the fixed set");
  auto comp = vertex_components(fixed);
  std::vector<VertexId> keep;
  for (VertexId v = 0; v < fixed.num_vertices(); ++v)
    if (comp[v] == comp[seed]) keep.push_back(v);
  return induced_subcomplex(fixed, keep);
}

}  // namespace cubecx
