#include "cubecx/divisibility.hpp"

#include <algorithm>
#include <map>
#include <functional>
#include <set>

#include "union_find.hpp"

namespace cubecx {

namespace {

using detail::ParityUnionFind;
using detail::UnionFind;

VertexSet all_vertices(const CubeComplex& c) {
  VertexSet s(c.num_vertices());
  for (VertexId v = 0; v < c.num_vertices(); ++v) s.insert(v);
  return s;
}

bool pairwise_disjoint(const HyperplaneStructure& hs, const std::vector<HyperplaneId>& ids) {
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (ids[i] == ids[j] || hs.crosses(ids[i], ids[j])) return false;
  return true;
}

// Every requirement of condition (4) for a colouring; colour_names index the
// half-carrier colours.
std::vector<Separation> requirements(const CubeComplex& c, const std::vector<VertexSet>& halves) {
  std::vector<Separation> out;
  for (VertexId x = 0; x < c.num_vertices(); ++x)
    for (VertexId y = x + 1; y < c.num_vertices(); ++y) out.push_back({Separation::Kind::pair, x, y, 0, true});
  for (std::size_t i = 0; i < halves.size(); ++i)
    for (VertexId x = 0; x < c.num_vertices(); ++x)
      if (!halves[i].contains(x)) out.push_back({Separation::Kind::half_carrier, x, 0, i / 2, i % 2 == 0});
  return out;
}

// Half-carriers of a colouring, indexed 2v (plus) and 2v+1 (minus).
std::vector<VertexSet> colour_halves(const HyperplaneStructure& hs, const SpecialColouring& col) {
  std::vector<VertexSet> out;
  for (std::size_t v = 0; v < col.num_colours(); ++v) {
    out.push_back(generalised_half_carrier(hs, col, v, true));
    out.push_back(generalised_half_carrier(hs, col, v, false));
  }
  return out;
}

// Half-carriers of single hyperplanes, indexed 2h (canonical) and 2h+1.
std::vector<VertexSet> hyperplane_halves(const HyperplaneStructure& hs) {
  std::vector<VertexSet> out;
  for (HyperplaneId h = 0; h < hs.size(); ++h) {
    out.push_back(hs.half_carrier({h, true}));
    out.push_back(hs.half_carrier({h, false}));
  }
  return out;
}

bool separated_by_components(const std::vector<std::size_t>& comp, const Separation& r,
                             const std::vector<VertexSet>& halves) {
  if (r.kind == Separation::Kind::pair) return comp[r.x] != comp[r.y];
  const auto& h = halves[2 * r.colour + (r.plus ? 0 : 1)];
  for (auto v : h.elements())
    if (comp[v] == comp[r.x]) return false;
  return true;
}

bool separated_by_partition(const Tripartition& t, const Separation& r, const std::vector<VertexSet>& halves) {
  if (r.kind == Separation::Kind::pair)
    return (t.minus.contains(r.x) && t.plus.contains(r.y)) || (t.plus.contains(r.x) && t.minus.contains(r.y));
  const auto& h = halves[2 * r.colour + (r.plus ? 0 : 1)];
  return (t.minus.contains(r.x) && h.subset_of(t.plus)) || (t.plus.contains(r.x) && h.subset_of(t.minus));
}

StrongDivisibility strong_over(const CubeComplex& c, const HyperplaneStructure& hs,
                               const std::vector<std::vector<HyperplaneId>>& families) {
  StrongDivisibility r;
  auto halves = hyperplane_halves(hs);
  auto reqs = requirements(c, halves);
  std::vector<char> done(reqs.size(), 0);
  for (const auto& f : families) {
    ++r.families;
    auto comp = components_without(c, hs, f);
    for (std::size_t i = 0; i < reqs.size(); ++i)
      if (!done[i] && separated_by_components(comp, reqs[i], halves)) done[i] = 1;
  }
  for (std::size_t i = 0; i < reqs.size(); ++i)
    if (!done[i]) {
      r.strongly_divisible = false;
      r.witness = reqs[i];
      break;
    }
  return r;
}

// Independent sets of g (nonempty), by ascending DFS; throws past cap.
void independent_sets(const SimplicialGraph& g, std::size_t cap, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> go = [&](std::size_t from) {
    for (std::size_t v = from; v < g.order(); ++v) {
      bool ok = true;
      for (auto u : cur)
        if (g.adjacent(u, v)) ok = false;
      if (!ok) continue;
      cur.push_back(v);
      if (out.size() >= cap) throw CapExceeded("zero-set enumeration exceeded its cap", cap);
      out.push_back(cur);
      go(v + 1);
      cur.pop_back();
    }
  };
  go(0);
}

}  // namespace

std::string Separation::describe(const CubeComplex& c, const std::vector<std::string>& colour_names) const {
  if (kind == Kind::pair) return "vertices " + c.vertex_name(x) + " and " + c.vertex_name(y);
  std::string name = colour < colour_names.size() ? colour_names[colour] : std::to_string(colour);
  return "vertex " + c.vertex_name(x) + " and half-carrier " + name + (plus ? "+" : "-");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<std::size_t> components_without(const CubeComplex& c, const HyperplaneStructure& hs,
                                            const std::vector<HyperplaneId>& removed) {
  std::vector<char> cut(hs.size(), 0);
  for (auto h : removed) cut.at(h) = 1;
  UnionFind uf(c.num_vertices());
  for (DartId d = 0; d < c.num_darts(); d += 2)
    if (!cut[hs.of_dart(d)]) uf.unite(c.origin(d), c.terminus(d));
  std::vector<std::size_t> label(c.num_vertices());
  std::map<std::size_t, std::size_t> dense;
  for (VertexId v = 0; v < c.num_vertices(); ++v) label[v] = dense.emplace(uf.find(v), dense.size()).first->second;
  return label;
}

std::string check_partition(const CubeComplex& c, const HyperplaneStructure& hs, const SpecialColouring& col,
                            const Tripartition& t) {
  for (auto h : t.zero)
    if (h >= hs.size()) throw PreconditionError("partition " + t.name + " names unknown hyperplane " + std::to_string(h));
  if (t.minus.universe() != c.num_vertices() || t.plus.universe() != c.num_vertices())
    throw PreconditionError("partition " + t.name + " has vertex sets of the wrong size");
  if (!pairwise_disjoint(hs, t.zero)) return "1: zero hyperplanes are not pairwise disjoint";
  std::vector<char> in_zero(hs.size(), 0);
  for (auto h : t.zero) in_zero[h] = 1;
  for (auto h : t.zero)
    for (auto k : col.fibre(col.colour_of[h]))
      if (!in_zero[k]) return "1: zero contains " + hs[h].name + " but not " + hs[k].name + " of the same colour";
  if (t.minus.intersects(t.plus)) return "2: minus and plus overlap";
  if (!((t.minus | t.plus) == all_vertices(c))) return "2: minus and plus miss a vertex";
  for (DartId d = 0; d < c.num_darts(); d += 2) {
    if (in_zero[hs.of_dart(d)]) continue;
    if (t.plus.contains(c.origin(d)) != t.plus.contains(c.terminus(d)))
      return "2: edge " + c.dart_name(d) + " joins the two sides";
  }
  std::set<std::size_t> colours;
  for (auto h : t.zero) colours.insert(col.colour_of[h]);
  for (auto v : colours) {
    auto cp = generalised_half_carrier(hs, col, v, true), cm = generalised_half_carrier(hs, col, v, false);
    bool straight = cp.subset_of(t.plus) && cm.subset_of(t.minus);
    bool crossed = cp.subset_of(t.minus) && cm.subset_of(t.plus);
    if (!straight && !crossed) return "3: half-carriers of colour " + col.graph.name(v) + " are not split";
  }
  return {};
}

PatternReport validate_pattern(const CubeComplex& c, const HyperplaneStructure& hs, const DividingPattern& p) {
  PatternReport r;
  auto cr = validate_colouring(c, hs, p.colouring);
  if (!cr.minimal()) {
    r.colouring_ok = false;
    for (const auto& w : cr.witnesses) r.witnesses.push_back({"colouring", std::nullopt, w.message});
  }
  for (std::size_t i = 0; i < p.partitions.size(); ++i) {
    auto msg = check_partition(c, hs, p.colouring, p.partitions[i]);
    if (msg.empty()) continue;
    auto cond = msg.substr(0, 1);
    (cond == "1" ? r.condition1 : cond == "2" ? r.condition2 : r.condition3) = false;
    r.witnesses.push_back({cond, i, p.partitions[i].name + ": " + msg.substr(3)});
  }
  auto halves = colour_halves(hs, p.colouring);
  for (const auto& req : requirements(c, halves)) {
    bool ok = false;
    for (const auto& t : p.partitions)
      if (separated_by_partition(t, req, halves)) {
        ok = true;
        break;
      }
    if (ok) continue;
    bool pair = req.kind == Separation::Kind::pair;
    (pair ? r.condition4a : r.condition4b) = false;
    if (r.witnesses.size() < 64)
      r.witnesses.push_back({pair ? "4a" : "4b", std::nullopt, "nothing separates " + req.describe(c, p.colouring.graph.names())});
  }
  return r;
}

StrongDivisibility is_strongly_divisible(const CubeComplex& c, const HyperplaneStructure& hs, std::size_t cap) {
  std::vector<std::vector<HyperplaneId>> families;
  if (hs.size() == 0) {
    families.emplace_back();
  } else {
    try {
      for (auto& s : maximal_independent_sets(crossing_graph(hs), cap))
        families.emplace_back(s.begin(), s.end());
    } catch (const CapExceeded&) {
      throw CapExceeded("maximal independent set enumeration exceeded its cap", cap);
    }
  }
  return strong_over(c, hs, families);
}

StrongDivisibility strongly_divisible_naive(const CubeComplex& c, const HyperplaneStructure& hs) {
  if (hs.size() > 24) throw PreconditionError("naive search is limited to 24 hyperplanes");
  std::vector<std::vector<HyperplaneId>> families;
  for (std::uint32_t mask = 0; mask < (1u << hs.size()); ++mask) {
    std::vector<HyperplaneId> f;
    for (HyperplaneId h = 0; h < hs.size(); ++h)
      if (mask >> h & 1u) f.push_back(h);
    if (pairwise_disjoint(hs, f)) families.push_back(std::move(f));
  }
  return strong_over(c, hs, families);
}

std::optional<DividingPattern> pattern_for_colouring(const CubeComplex& c, const HyperplaneStructure& hs,
                                                     const SpecialColouring& col, const DivisibilityCaps& caps) {
  auto halves = colour_halves(hs, col);
  auto reqs = requirements(c, halves);
  std::vector<char> done(reqs.size(), 0);
  std::size_t remaining = reqs.size();
  DividingPattern p{col, {}};
  std::vector<std::vector<std::size_t>> zsets;
  independent_sets(col.graph, caps.zero_sets, zsets);

  for (const auto& zs : zsets) {
    if (remaining == 0) break;
    std::vector<HyperplaneId> zero;
    for (auto v : zs)
      for (auto h : col.fibre(v)) zero.push_back(h);
    std::sort(zero.begin(), zero.end());
    auto comp = components_without(c, hs, zero);
    const std::size_t ncomp = c.num_vertices() ? *std::max_element(comp.begin(), comp.end()) + 1 : 0;
    // Condition (3) as parity constraints between components.
    ParityUnionFind base(ncomp);
    bool feasible = true;
    for (auto v : zs) {
      const auto& cp = halves[2 * v];
      const auto& cm = halves[2 * v + 1];
      auto pe = cp.elements(), me = cm.elements();
      if (pe.empty() || me.empty()) continue;
      for (auto a : pe) feasible &= base.unite(comp[pe[0]], comp[a], 0);
      for (auto b : me) feasible &= base.unite(comp[pe[0]], comp[b], 1);
      if (!feasible) break;
    }
    if (!feasible) continue;

    for (std::size_t i = 0; i < reqs.size(); ++i) {
      if (done[i]) continue;
      const auto& r = reqs[i];
      ParityUnionFind uf = base;
      bool ok = true;
      if (r.kind == Separation::Kind::pair) {
        ok = uf.unite(comp[r.x], comp[r.y], 1);
      } else {
        for (auto v : halves[2 * r.colour + (r.plus ? 0 : 1)].elements()) {
          ok = uf.unite(comp[r.x], comp[v], 1);
          if (!ok) break;
        }
      }
      if (!ok) continue;
      Tripartition t{"", zero, VertexSet(c.num_vertices()), VertexSet(c.num_vertices())};
      // x always lands on the minus side.
      int flip = uf.find(comp[r.x]).second;
      for (VertexId v = 0; v < c.num_vertices(); ++v) {
        auto [root, parity] = uf.find(comp[v]);
        bool plus = root == uf.find(comp[r.x]).first ? (parity ^ flip) != 0 : parity != 0;
        (plus ? t.plus : t.minus).insert(v);
      }
      if (std::find(p.partitions.begin(), p.partitions.end(), t) == p.partitions.end()) {
        for (std::size_t j = 0; j < reqs.size(); ++j)
          if (!done[j] && separated_by_partition(t, reqs[j], halves)) {
            done[j] = 1;
            --remaining;
          }
        p.partitions.push_back(std::move(t));
      }
      if (remaining == 0) break;
    }
  }
  if (remaining != 0) return std::nullopt;
  for (std::size_t i = 0; i < p.partitions.size(); ++i) p.partitions[i].name = "H" + std::to_string(i + 1);
  return p;
}

std::optional<DividingPattern> strong_pattern(const CubeComplex& c, const HyperplaneStructure& hs, std::size_t cap) {
  auto col = standard_colouring(c, hs);
  std::vector<std::vector<HyperplaneId>> families;
  if (hs.size() == 0) {
    families.emplace_back();
  } else {
    for (auto& s : maximal_independent_sets(crossing_graph(hs), cap)) families.emplace_back(s.begin(), s.end());
  }
  auto halves = hyperplane_halves(hs);
  auto reqs = requirements(c, halves);
  DividingPattern p{col, {}};
  for (const auto& r : reqs) {
    bool covered = false;
    for (const auto& t : p.partitions)
      if (separated_by_partition(t, r, halves)) {
        covered = true;
        break;
      }
    if (covered) continue;
    bool placed = false;
    for (const auto& f : families) {
      auto comp = components_without(c, hs, f);
      if (!separated_by_components(comp, r, halves)) continue;
      // π = (F, component of x); reduce to σ = (F', c').
      VertexSet cell(c.num_vertices());
      for (VertexId v = 0; v < c.num_vertices(); ++v)
        if (comp[v] == comp[r.x]) cell.insert(v);
      std::vector<HyperplaneId> kept;
      for (auto h : f) {
        bool meets_pos = hs.half_carrier({h, true}).intersects(cell);
        bool meets_neg = hs.half_carrier({h, false}).intersects(cell);
        if (meets_pos != meets_neg) kept.push_back(h);
      }
      auto tried = [&](const std::vector<HyperplaneId>& zero) -> bool {
        auto comp2 = components_without(c, hs, zero);
        Tripartition t{"", zero, VertexSet(c.num_vertices()), VertexSet(c.num_vertices())};
        std::set<std::size_t> touched;
        for (auto v : cell.elements()) touched.insert(comp2[v]);
        for (VertexId v = 0; v < c.num_vertices(); ++v) (touched.count(comp2[v]) ? t.plus : t.minus).insert(v);
        if (!check_partition(c, hs, col, t).empty() || !separated_by_partition(t, r, halves)) return false;
        p.partitions.push_back(std::move(t));
        return true;
      };
      if (tried(kept) || tried(f)) {
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }
  for (std::size_t i = 0; i < p.partitions.size(); ++i) p.partitions[i].name = "H" + std::to_string(i + 1);
  return p;
}

DivisibilityResult decide_divisible_exhaustive(const CubeComplex& c, const HyperplaneStructure& hs,
                                               const DivisibilityCaps& caps) {
  DivisibilityResult res;
  auto special = is_special(c, hs);
  if (!special.special) throw PreconditionError("complex is not special: " + special.describe(c, hs));
  try {
    auto sd = is_strongly_divisible(c, hs, caps.independent_sets);
    if (sd.strongly_divisible) {
      if (auto p = strong_pattern(c, hs, caps.independent_sets); p && validate_pattern(c, hs, *p).ok()) {
        res.verdict = Verdict::yes;
        res.pattern = std::move(p);
        res.colourings_examined = 1;
        res.note = "strongly divisible; standard colouring";
        return res;
      }
    }
  } catch (const CapExceeded& e) {
    res.note = std::string("strong divisibility skipped: ") + e.what();
  }
  try {
    EnumerationOptions opts;
    opts.cap = caps.colourings;
    enumerate_minimal_colourings(c, hs, opts, [&](const SpecialColouring& col) {
      ++res.colourings_examined;
      auto p = pattern_for_colouring(c, hs, col, caps);
      if (!p) return true;
      auto rep = validate_pattern(c, hs, *p);
      if (!rep.ok()) throw InternalConsistencyError("constructed pattern fails validation");
      res.pattern = std::move(p);
      return false;
    });
  } catch (const CapExceeded& e) {
    res.verdict = Verdict::inconclusive;
    res.note = e.what();
    return res;
  }
  res.verdict = res.pattern ? Verdict::yes : Verdict::no;
  if (res.note.empty()) res.note = std::to_string(res.colourings_examined) + " colourings examined";
  return res;
}

bool transverse(const Tripartition& a, const Tripartition& b) {
  return a.minus.intersects(b.minus) && a.minus.intersects(b.plus) && a.plus.intersects(b.minus) &&
         a.plus.intersects(b.plus);
}

ColourTransversality transverse_colour(const HyperplaneStructure& hs, const SpecialColouring& col,
                                       const Tripartition& t, std::size_t colour) {
  ColourTransversality r;
  auto cp = generalised_half_carrier(hs, col, colour, true), cm = generalised_half_carrier(hs, col, colour, false);
  r.transverse = cp.intersects(t.minus) && cp.intersects(t.plus) && cm.intersects(t.minus) && cm.intersects(t.plus);
  auto fib = col.fibre(colour);
  for (auto h : fib)
    for (auto z : t.zero)
      if (hs.crosses(h, z)) r.via_crossing = true;
  bool in_plus = false, in_minus = false;
  for (auto h : fib) {
    const auto& cv = hs.carrier_vertices(h);
    in_plus |= cv.subset_of(t.plus);
    in_minus |= cv.subset_of(t.minus);
  }
  r.via_split = in_plus && in_minus;
  return r;
}

SimplicialGraph extended_crossing_graph(const HyperplaneStructure& hs, const DividingPattern& p) {
  SimplicialGraph g = p.colouring.graph;
  const std::size_t base = g.order();
  for (std::size_t i = 0; i < p.partitions.size(); ++i) g.add_vertex(p.partitions[i].name);
  for (std::size_t i = 0; i < p.partitions.size(); ++i) {
    for (std::size_t j = i + 1; j < p.partitions.size(); ++j)
      if (transverse(p.partitions[i], p.partitions[j])) g.add_edge(base + i, base + j);
    for (std::size_t v = 0; v < base; ++v)
      if (transverse_colour(hs, p.colouring, p.partitions[i], v).transverse) g.add_edge(base + i, v);
  }
  return g;
}

}  // namespace cubecx
