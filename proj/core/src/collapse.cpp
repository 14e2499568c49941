#include "cubecx/collapse.hpp"

#include "cubecx/hyperplanes.hpp"
#include "union_find.hpp"

namespace cubecx {

namespace {

using detail::UnionFind;

CollapseResult collapse_one(const CubeComplex& c, const HyperplaneStructure& hs, HyperplaneId h) {
  if (!hs.is_carrier_retract(h)) {
    std::string detail;
    if (!hs.orientable(h)) {
      detail = hs[h].embedded ? "it is one-sided" : "it self-intersects";
    } else {
      auto shared = hs.half_carrier({h, true}) & hs.half_carrier({h, false});
      detail = "half-carriers share";
      for (auto v : shared.elements()) detail += " " + c.vertex_name(v);
    }
    throw NotCarrierRetract(hs[h].name, detail);
  }
  UnionFind vuf(c.num_vertices());
  for (auto e : hs[h].edges) vuf.unite(c.origin(2 * e), c.terminus(2 * e));
  UnionFind duf(c.num_darts());
  for (const auto& f : c.cubes(2))
    for (int a = 0; a < 2; ++a) {
      if (hs.axis(f, a) != h) continue;
      int b = 1 - a;
      DartId p = f.away(0, b), q = f.away(std::size_t{1} << a, b);
      duf.unite(p, q);
      duf.unite(p ^ 1u, q ^ 1u);
    }

  ComplexBuilder out;
  std::vector<VertexId> vmap(c.num_vertices(), kNone);
  for (VertexId v = 0; v < c.num_vertices(); ++v) {
    auto r = vuf.find(v);
    if (vmap[r] == kNone) vmap[r] = out.add_vertex(c.vertex_name(r));
    vmap[v] = vmap[r];
  }
  std::vector<DartId> class_image(c.num_darts(), kNone);
  std::vector<DartId> dmap(c.num_darts(), kNone);
  for (DartId d = 0; d < c.num_darts(); d += 2) {
    if (hs.of_dart(d) == h) continue;
    auto r = duf.find(d), rr = duf.find(d + 1);
    if (class_image[r] == kNone) {
      auto nd = out.add_edge(vmap[c.origin(d)], vmap[c.terminus(d)], c.dart_name(d), c.dart_name(d + 1), c.label(d),
                             c.label(d + 1));
      class_image[r] = nd;
      class_image[rr] = nd + 1;
    }
    dmap[d] = class_image[r];
    dmap[d + 1] = class_image[rr];
  }
  for (int k = 2; k <= c.dimension(); ++k)
    for (const auto& f : c.cubes(k)) {
      bool crushed = false;
      for (int a = 0; a < k; ++a) crushed |= hs.axis(f, a) == h;
      if (crushed) continue;
      out.add_cube(f.mapped([&](VertexId v) { return vmap[v]; }, [&](DartId d) { return dmap[d]; }));
    }
  CollapseResult r{out.build(), {}};
  r.quotient = make_cubical_map(c, r.complex, std::move(vmap), std::move(dmap));
  return r;
}

}  // namespace

CollapseResult collapse(const CubeComplex& c, std::span<const HyperplaneId> hyperplanes) {
  HyperplaneStructure original(c);
  for (auto h : hyperplanes)
    if (h >= original.size()) throw PreconditionError("unknown hyperplane id " + std::to_string(h));
  CollapseResult acc{c, identity_map(c)};
  for (auto h : hyperplanes) {
    // Track h through earlier quotients by one of its darts.
    DartId d = acc.quotient.dart_map[2 * original[h].edges.front()];
    if (d == kNone) throw PreconditionError("hyperplane '" + original[h].name + "' listed twice");
    HyperplaneStructure now(acc.complex);
    auto step = collapse_one(acc.complex, now, now.of_dart(d));
    acc.quotient = compose(step.quotient, acc.quotient);
    acc.complex = std::move(step.complex);
  }
  return acc;
}

}  // namespace cubecx
