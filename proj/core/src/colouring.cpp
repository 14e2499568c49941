#include "cubecx/colouring.hpp"

#include <algorithm>
#include <map>

#include "union_find.hpp"

namespace cubecx {

namespace {

const VertexSet& half(const HyperplaneStructure& hs, HyperplaneId h, bool canonical_side) {
  return hs.half_carrier({h, canonical_side});
}

// Relative orientation parities allowed for two hyperplanes sharing a colour:
// bit 0 = same flip, bit 1 = opposite flips.
unsigned allowed_parities(const HyperplaneStructure& hs, HyperplaneId h, HyperplaneId k) {
  unsigned mask = 0;
  if (!half(hs, h, true).intersects(half(hs, k, true)) && !half(hs, h, false).intersects(half(hs, k, false)))
    mask |= 1u;
  if (!half(hs, h, true).intersects(half(hs, k, false)) && !half(hs, h, false).intersects(half(hs, k, true)))
    mask |= 2u;
  return mask;
}

void require_special(const CubeComplex& c, const HyperplaneStructure& hs) {
  auto r = is_special(c, hs);
  if (!r.special) throw PreconditionError("complex is not special: " + r.describe(c, hs));
}

}  // namespace

std::vector<HyperplaneId> SpecialColouring::fibre(std::size_t v) const {
  std::vector<HyperplaneId> out;
  for (HyperplaneId h = 0; h < colour_of.size(); ++h)
    if (colour_of[h] == v) out.push_back(h);
  return out;
}

VertexSet generalised_carrier(const HyperplaneStructure& hs, const SpecialColouring& col, std::size_t v) {
  VertexSet s(hs.size() ? hs.carrier_vertices(0).universe() : 0);
  for (auto h : col.fibre(v)) s |= hs.carrier_vertices(h);
  return s;
}

VertexSet generalised_half_carrier(const HyperplaneStructure& hs, const SpecialColouring& col, std::size_t v,
                                   bool plus) {
  VertexSet s(hs.size() ? hs.carrier_vertices(0).universe() : 0);
  for (auto h : col.fibre(v)) {
    // v+ is the orientation `positive(h)`; v- its flip.
    auto o = col.positive(h);
    s |= hs.half_carrier(plus ? o : o.flipped());
  }
  return s;
}

ColouringReport validate_colouring(const CubeComplex& c, const HyperplaneStructure& hs,
                                   const SpecialColouring& col) {
  if (col.colour_of.size() != hs.size() || col.flipped.size() != hs.size())
    throw PreconditionError("colouring must assign every hyperplane a colour and an orientation");
  for (auto v : col.colour_of)
    if (v >= col.graph.order()) throw PreconditionError("colour index out of range");
  (void)c;
  ColouringReport r;
  // (1) holds by construction once each hyperplane is orientable: its two
  // orientations receive v+ and v-.
  r.condition[1] = true;
  for (HyperplaneId h = 0; h < hs.size(); ++h)
    if (!hs.orientable(h)) {
      r.condition[1] = false;
      r.witnesses.push_back({1, {h}, col.colour_of[h], "hyperplane " + hs[h].name + " has no orientation"});
    }
  const std::size_t n = hs.size();
  for (HyperplaneId h = 0; h < n; ++h)
    for (HyperplaneId k = h + 1; k < n; ++k) {
      if (col.colour_of[h] == col.colour_of[k]) {
        for (int s = 0; s < 2; ++s) {
          auto oh = s ? col.positive(h).flipped() : col.positive(h);
          auto ok = s ? col.positive(k).flipped() : col.positive(k);
          if (hs.half_carrier(oh).intersects(hs.half_carrier(ok))) {
            r.condition[2] = false;
            r.witnesses.push_back({2, {h, k}, col.colour_of[h],
                                   "half-carriers of " + hs[h].name + " and " + hs[k].name + " coloured " +
                                       col.graph.name(col.colour_of[h]) + (s ? "-" : "+") + " meet"});
          }
        }
      }
      if (!hs.carrier_vertices(h).intersects(hs.carrier_vertices(k))) continue;
      bool cross = hs.crosses(h, k);
      bool adj = col.colour_of[h] != col.colour_of[k] && col.graph.adjacent(col.colour_of[h], col.colour_of[k]);
      if (cross != adj) {
        r.condition[3] = false;
        r.witnesses.push_back({3, {h, k}, std::nullopt,
                               hs[h].name + " and " + hs[k].name + (cross ? " cross" : " do not cross") +
                                   " but their colours are" + (adj ? "" : " not") + " adjacent"});
      }
    }
  std::vector<char> used(col.graph.order(), 0);
  for (auto v : col.colour_of) used[v] = 1;
  for (std::size_t v = 0; v < col.graph.order(); ++v)
    if (!used[v]) {
      r.condition[4] = false;
      r.witnesses.push_back({4, {}, v, "colour " + col.graph.name(v) + " is unused"});
    }
  for (auto [v, w] : col.graph.edges()) {
    bool realised = false;
    for (HyperplaneId h = 0; h < n && !realised; ++h)
      if (col.colour_of[h] == v)
        for (HyperplaneId k = 0; k < n && !realised; ++k)
          if (col.colour_of[k] == w && hs.crosses(h, k)) realised = true;
    if (!realised) {
      r.condition[4] = false;
      r.witnesses.push_back({4, {}, v, "edge " + col.graph.name(v) + "-" + col.graph.name(w) + " is not realised"});
    }
  }
  return r;
}

SpecialColouring colouring_from_classes(const HyperplaneStructure& hs,
                                        const std::vector<std::vector<HyperplaneId>>& classes,
                                        std::vector<bool> flipped, std::vector<std::string> names) {
  SpecialColouring col;
  col.colour_of.assign(hs.size(), kNone);
  col.flipped = flipped.empty() ? std::vector<bool>(hs.size(), false) : std::move(flipped);
  if (col.flipped.size() != hs.size()) throw PreconditionError("flip vector has the wrong size");
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) throw PreconditionError("empty colour class");
    auto least = *std::min_element(classes[i].begin(), classes[i].end());
    col.graph.add_vertex(i < names.size() ? names[i] : hs[least].name);
    for (auto h : classes[i]) {
      if (h >= hs.size()) throw PreconditionError("unknown hyperplane id " + std::to_string(h));
      if (col.colour_of[h] != kNone) throw PreconditionError("hyperplane " + hs[h].name + " in two classes");
      col.colour_of[h] = i;
    }
  }
  for (HyperplaneId h = 0; h < hs.size(); ++h)
    if (col.colour_of[h] == kNone) throw PreconditionError("hyperplane " + hs[h].name + " has no colour");
  for (auto [h, k] : hs.crossings())
    if (col.colour_of[h] != col.colour_of[k]) col.graph.add_edge(col.colour_of[h], col.colour_of[k]);
  return col;
}

SpecialColouring standard_colouring(const CubeComplex& c, const HyperplaneStructure& hs) {
  require_special(c, hs);
  std::vector<std::vector<HyperplaneId>> classes;
  for (HyperplaneId h = 0; h < hs.size(); ++h) classes.push_back({h});
  return colouring_from_classes(hs, classes);
}

bool is_standard(const SpecialColouring& col, std::size_t num_hyperplanes) {
  if (col.graph.order() != num_hyperplanes) return false;
  std::vector<char> seen(num_hyperplanes, 0);
  for (auto v : col.colour_of) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<std::optional<std::string>> germ_labels(const HyperplaneStructure& hs, const SpecialColouring& col) {
  std::size_t darts = 0;
  for (const auto& h : hs.all()) darts += 2 * h.edges.size();
  std::vector<std::optional<std::string>> labels(darts);
  for (DartId d = 0; d < darts; ++d) {
    auto h = hs.of_dart(d);
    bool along_canonical = hs.sign(d) > 0;
    bool plus = along_canonical != col.flipped[h];
    labels[d] = col.graph.name(col.colour_of[h]) + (plus ? "+" : "-");
  }
  return labels;
}

CubeComplex with_colouring_labels(const CubeComplex& c, const HyperplaneStructure& hs,
                                  const SpecialColouring& col) {
  return c.with_labels(germ_labels(hs, col));
}

SpecialColouring colouring_from_labels(const CubeComplex& c, const HyperplaneStructure& hs,
                                       const SimplicialGraph& graph) {
  SpecialColouring col;
  col.graph = graph;
  col.colour_of.assign(hs.size(), kNone);
  col.flipped.assign(hs.size(), false);
  for (DartId d = 0; d < c.num_darts(); ++d) {
    const auto& l = c.label(d);
    if (!l || l->size() < 2 || (l->back() != '+' && l->back() != '-'))
      throw FormatError("dart " + c.dart_name(d) + " lacks a colour label");
    auto v = graph.find(l->substr(0, l->size() - 1));
    if (!v) throw FormatError("label " + *l + " names no colour");
    auto h = hs.of_dart(d);
    if (hs.sign(d) == 0) throw FormatError("dart " + c.dart_name(d) + " is dual to an unorientable hyperplane");
    bool plus = l->back() == '+';
    bool flip = (hs.sign(d) > 0) != plus;
    if (col.colour_of[h] == kNone) {
      col.colour_of[h] = *v;
      col.flipped[h] = flip;
    } else if (col.colour_of[h] != *v || col.flipped[h] != flip) {
      throw FormatError("labels on hyperplane " + hs[h].name + " disagree");
    }
  }
  for (HyperplaneId h = 0; h < hs.size(); ++h)
    if (col.colour_of[h] == kNone) throw FormatError("hyperplane " + hs[h].name + " carries no label");
  return col;
}

namespace {

class ColouringSearch {
 public:
  ColouringSearch(const HyperplaneStructure& hs, const EnumerationOptions& opts,
                  const std::function<bool(const SpecialColouring&)>& visit)
      : hs_(hs), opts_(opts), visit_(visit), n_(hs.size()) {
    meet_.assign(n_, std::vector<char>(n_, 0));
    parity_.assign(n_, std::vector<unsigned>(n_, 3u));
    for (HyperplaneId h = 0; h < n_; ++h)
      for (HyperplaneId k = 0; k < n_; ++k)
        if (h != k) {
          meet_[h][k] = hs.carrier_vertices(h).intersects(hs.carrier_vertices(k));
          parity_[h][k] = allowed_parities(hs, h, k);
        }
  }

  std::size_t run() {
    if (n_ == 0) {
      SpecialColouring empty;
      ++visited_;
      visit_(empty);
      return visited_;
    }
    members_.clear();
    status_.clear();
    descend(0);
    return visited_;
  }

 private:
  // status_[x][y]: 0 unknown, 1 all meeting pairs cross, 2 none cross.
  bool place(HyperplaneId h, std::size_t x, std::vector<std::tuple<std::size_t, std::size_t>>& undo) {
    for (auto k : members_[x])
      if (hs_.crosses(h, k) || parity_[h][k] == 0) return false;
    if (!orientable_class(x, h)) return false;
    for (std::size_t y = 0; y < members_.size(); ++y) {
      if (y == x) continue;
      for (auto k : members_[y]) {
        if (!meet_[h][k]) continue;
        char s = hs_.crosses(h, k) ? 1 : 2;
        auto& cur = status_[std::min(x, y)][std::max(x, y)];
        if (cur == 0) {
          cur = s;
          undo.emplace_back(std::min(x, y), std::max(x, y));
        } else if (cur != s) {
          return false;
        }
      }
    }
    return true;
  }

  bool orientable_class(std::size_t x, HyperplaneId extra) const {
    std::vector<HyperplaneId> ms = members_[x];
    ms.push_back(extra);
    detail::ParityUnionFind uf(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j) {
        unsigned m = parity_[ms[i]][ms[j]];
        if (m == 3u) continue;
        if (!uf.unite(i, j, m == 1u ? 0 : 1)) return false;
      }
    return true;
  }

  void descend(HyperplaneId h) {
    if (stop_) return;
    if (h == n_) {
      leaf();
      return;
    }
    const std::size_t classes = members_.size();
    for (std::size_t x = 0; x <= classes && !stop_; ++x) {
      if (x == classes) {
        if (opts_.max_classes && classes + 1 > *opts_.max_classes) break;
        members_.emplace_back();
        for (auto& row : status_) row.push_back(0);
        status_.emplace_back(classes + 1, 0);
      }
      std::vector<std::tuple<std::size_t, std::size_t>> undo;
      if (place(h, x, undo)) {
        members_[x].push_back(h);
        descend(h + 1);
        members_[x].pop_back();
      }
      for (auto [a, b] : undo) status_[a][b] = 0;
      if (x == classes) {
        members_.pop_back();
        status_.pop_back();
        for (auto& row : status_) row.pop_back();
      }
    }
  }

  void leaf() {
    if (++partitions_ > opts_.cap) throw CapExceeded("colouring enumeration exceeded its partition cap", opts_.cap);
    // Orientation groups per class; the group holding the least member is pinned.
    std::vector<bool> flips(n_, false);
    std::vector<std::vector<std::pair<HyperplaneId, int>>> groups;
    std::vector<std::size_t> pinned;
    for (const auto& ms : members_) {
      detail::ParityUnionFind uf(ms.size());
      for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
          unsigned m = parity_[ms[i]][ms[j]];
          if (m != 3u) uf.unite(i, j, m == 1u ? 0 : 1);
        }
      std::map<std::size_t, std::size_t> group_of_root;
      for (std::size_t i = 0; i < ms.size(); ++i) {
        auto [r, p] = uf.find(i);
        auto it = group_of_root.find(r);
        if (it == group_of_root.end()) {
          it = group_of_root.emplace(r, groups.size()).first;
          if (i == 0) pinned.push_back(groups.size());
          groups.emplace_back();
        }
        groups[it->second].emplace_back(ms[i], p);
      }
    }
    std::vector<char> is_pinned(groups.size(), 0);
    for (auto g : pinned) is_pinned[g] = 1;
    std::vector<std::size_t> free_groups;
    for (std::size_t g = 0; g < groups.size(); ++g)
      if (!is_pinned[g]) free_groups.push_back(g);
    if (free_groups.size() >= 40) throw CapExceeded("too many independent orientation choices", opts_.cap);
    const std::uint64_t combos = std::uint64_t{1} << free_groups.size();
    std::vector<std::vector<HyperplaneId>> classes(members_.begin(), members_.end());
    for (std::uint64_t mask = 0; mask < combos && !stop_; ++mask) {
      for (std::size_t g = 0; g < groups.size(); ++g) {
        // Pinned groups: the least member keeps its canonical orientation.
        int base = groups[g].front().second;
        bool extra = false;
        if (!is_pinned[g]) {
          auto pos = std::find(free_groups.begin(), free_groups.end(), g) - free_groups.begin();
          extra = (mask >> pos) & 1u;
        }
        for (auto [h, p] : groups[g]) flips[h] = ((p ^ base) != 0) != extra;
      }
      auto col = colouring_from_classes(hs_, classes, flips);
      ++visited_;
      if (!visit_(col)) stop_ = true;
    }
  }

  const HyperplaneStructure& hs_;
  const EnumerationOptions& opts_;
  const std::function<bool(const SpecialColouring&)>& visit_;
  std::size_t n_;
  std::vector<std::vector<char>> meet_;
  std::vector<std::vector<unsigned>> parity_;
  std::vector<std::vector<HyperplaneId>> members_;
  std::vector<std::vector<char>> status_;
  std::size_t partitions_ = 0;
  std::size_t visited_ = 0;
  bool stop_ = false;
};

}  // namespace

std::size_t enumerate_minimal_colourings(const CubeComplex& c, const HyperplaneStructure& hs,
                                         const EnumerationOptions& opts,
                                         const std::function<bool(const SpecialColouring&)>& visit) {
  require_special(c, hs);
  ColouringSearch s(hs, opts, visit);
  return s.run();
}

std::vector<SpecialColouring> minimal_colourings(const CubeComplex& c, const HyperplaneStructure& hs,
                                                 const EnumerationOptions& opts) {
  std::vector<SpecialColouring> out;
  enumerate_minimal_colourings(c, hs, opts, [&](const SpecialColouring& col) {
    out.push_back(col);
    return true;
  });
  return out;
}

}  // namespace cubecx
