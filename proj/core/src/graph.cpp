#include "cubecx/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "cubecx/types.hpp"

namespace cubecx {

SimplicialGraph::SimplicialGraph(std::vector<std::string> names) {
  for (auto& n : names) add_vertex(std::move(n));
}

std::size_t SimplicialGraph::add_vertex(std::string name) {
  if (index_.count(name)) throw PreconditionError("duplicate graph vertex '" + name + "'");
  std::size_t id = names_.size();
  index_.emplace(name, id);
  names_.push_back(std::move(name));
  adj_.emplace_back();
  return id;
}

void SimplicialGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) throw PreconditionError("loop at graph vertex '" + names_[a] + "'");
  if (adj_[a].insert(b).second) {
    adj_[b].insert(a);
    ++edge_count_;
  }
}

void SimplicialGraph::add_edge(const std::string& a, const std::string& b) {
  add_edge(index(a), index(b));
}

std::optional<std::size_t> SimplicialGraph::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SimplicialGraph::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw PreconditionError("unknown graph vertex '" + name + "'");
  return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> SimplicialGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adj_.size(); ++a)
    for (auto b : adj_[a])
      if (a < b) out.emplace_back(a, b);
  return out;
}

SimplicialGraph SimplicialGraph::induced(const std::vector<std::size_t>& vertices) const {
  SimplicialGraph g;
  std::vector<std::size_t> local(order(), SIZE_MAX);
  for (auto v : vertices) local[v] = g.add_vertex(names_[v]);
  for (auto v : vertices)
    for (auto w : adj_[v])
      if (local[w] != SIZE_MAX) g.add_edge(local[v], local[w]);
  return g;
}

SimplicialGraph SimplicialGraph::complement() const {
  SimplicialGraph g(names_);
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (!adjacent(a, b)) g.add_edge(a, b);
  return g;
}

bool SimplicialGraph::same_as(const SimplicialGraph& other) const {
  if (order() != other.order() || size() != other.size()) return false;
  for (std::size_t v = 0; v < order(); ++v)
    if (!other.find(names_[v])) return false;
  for (auto [a, b] : edges())
    if (!other.adjacent(other.index(names_[a]), other.index(names_[b]))) return false;
  return true;
}

namespace {

void bron_kerbosch(const SimplicialGraph& g, std::vector<std::size_t>& r, std::vector<std::size_t> p,
                   std::vector<std::size_t> x, std::vector<std::vector<std::size_t>>& out,
                   std::size_t cap) {
  if (p.empty() && x.empty()) {
    if (out.size() >= cap) throw CapExceeded("maximal clique enumeration", cap);
    auto k = r;
    std::sort(k.begin(), k.end());
    out.push_back(std::move(k));
    return;
  }
  // Pivot maximising |P ∩ N(u)|.
  std::size_t pivot = p.empty() ? x.front() : p.front();
  std::size_t best = 0;
  for (const auto* s : {&p, &x})
    for (auto u : *s) {
      std::size_t c = 0;
      for (auto v : p) c += g.adjacent(u, v);
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
  std::vector<std::size_t> candidates;
  for (auto v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  for (auto v : candidates) {
    std::vector<std::size_t> np, nx;
    for (auto w : p)
      if (g.adjacent(v, w)) np.push_back(w);
    for (auto w : x)
      if (g.adjacent(v, w)) nx.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(np), std::move(nx), out, cap);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

void extend_cliques(const SimplicialGraph& g, std::vector<std::size_t>& cur, std::size_t next,
                    std::size_t min_size, std::size_t max_size,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() >= min_size) out.push_back(cur);
  if (cur.size() == max_size) return;
  for (std::size_t v = next; v < g.order(); ++v) {
    bool ok = true;
    for (auto u : cur)
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    extend_cliques(g, cur, v + 1, min_size, max_size, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> maximal_cliques(const SimplicialGraph& g, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  if (g.order() == 0) return out;
  std::vector<std::size_t> r, p(g.order());
  std::iota(p.begin(), p.end(), 0);
  bron_kerbosch(g, r, std::move(p), {}, out, cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> all_cliques(const SimplicialGraph& g, std::size_t min_size,
                                                  std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  extend_cliques(g, cur, 0, min_size, max_size, out);
  return out;
}

std::vector<std::vector<std::size_t>> maximal_independent_sets(const SimplicialGraph& g,
                                                               std::size_t cap) {
  return maximal_cliques(g.complement(), cap);
}

std::vector<std::size_t> component_labels(const SimplicialGraph& g) {
  std::vector<std::size_t> label(g.order(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (label[s] != SIZE_MAX) continue;
    std::vector<std::size_t> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : g.neighbours(v))
        if (label[w] == SIZE_MAX) {
          label[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return label;
}

namespace {

// Joint colour refinement so colours are comparable across the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine(const SimplicialGraph& a,
                                                     const SimplicialGraph& b) {
  std::vector<int> ca(a.order()), cb(b.order());
  for (std::size_t v = 0; v < a.order(); ++v) ca[v] = static_cast<int>(a.degree(v));
  for (std::size_t v = 0; v < b.order(); ++v) cb[v] = static_cast<int>(b.degree(v));
  std::size_t classes = 0;
  for (int round = 0; round < 64; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> dict;
    auto signature = [&](const SimplicialGraph& g, const std::vector<int>& c, std::size_t v) {
      std::vector<int> ns;
      for (auto w : g.neighbours(v)) ns.push_back(c[w]);
      std::sort(ns.begin(), ns.end());
      return std::make_pair(c[v], std::move(ns));
    };
    std::vector<std::pair<int, std::vector<int>>> sa, sb;
    for (std::size_t v = 0; v < a.order(); ++v) sa.push_back(signature(a, ca, v));
    for (std::size_t v = 0; v < b.order(); ++v) sb.push_back(signature(b, cb, v));
    for (auto& s : sa) dict.emplace(s, 0);
    for (auto& s : sb) dict.emplace(s, 0);
    int next = 0;
    for (auto& [k, val] : dict) val = next++;
    for (std::size_t v = 0; v < a.order(); ++v) ca[v] = dict[sa[v]];
    for (std::size_t v = 0; v < b.order(); ++v) cb[v] = dict[sb[v]];
    if (dict.size() == classes) break;
    classes = dict.size();
  }
  return {ca, cb};
}

}  // namespace

std::optional<std::vector<std::size_t>> find_graph_isomorphism(const SimplicialGraph& a,
                                                               const SimplicialGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  const std::size_t n = a.order();
  auto [ca, cb] = refine(a, b);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  // Order: greedily prefer vertices with many already-ordered neighbours.
  std::vector<std::size_t> order;
  std::vector<char> placed(n, 0);
  std::map<int, std::size_t> freq;
  for (auto c : ca) ++freq[c];
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = SIZE_MAX;
    std::pair<std::size_t, std::size_t> key{0, 0};
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t linked = 0;
      for (auto w : a.neighbours(v)) linked += placed[w];
      std::pair<std::size_t, std::size_t> k{linked, SIZE_MAX - freq[ca[v]]};
      if (best == SIZE_MAX || k > key) {
        best = v;
        key = k;
      }
    }
    placed[best] = 1;
    order.push_back(best);
  }
  std::vector<std::size_t> map(n, SIZE_MAX);
  std::vector<char> used(n, 0);
  // Iterative backtracking over `order`.
  std::vector<std::size_t> cursor(n + 1, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) return map;
    std::size_t v = order[depth];
    bool advanced = false;
    for (std::size_t& c = cursor[depth]; c < n; ++c) {
      std::size_t t = c;
      if (used[t] || cb[t] != ca[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < depth && ok; ++j) {
        auto u = order[j];
        if (a.adjacent(v, u) != b.adjacent(t, map[u])) ok = false;
      }
      if (!ok) continue;
      map[v] = t;
      used[t] = 1;
      ++c;
      ++depth;
      cursor[depth] = 0;
      advanced = true;
      break;
    }
    if (advanced) continue;
    if (depth == 0) return std::nullopt;
    --depth;
    auto pv = order[depth];
    used[map[pv]] = 0;
    map[pv] = SIZE_MAX;
  }
}

namespace graphs {

namespace {
std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}
}  // namespace

SimplicialGraph path(std::size_t n) {
  SimplicialGraph g(numbered(n));
  for (std::size_t i = 1; i < n; ++i) g.add_edge(i - 1, i);
  return g;
}

SimplicialGraph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle needs at least 3 vertices");
  SimplicialGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimplicialGraph complete(std::size_t n) {
  SimplicialGraph g(numbered(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimplicialGraph anticlique(std::size_t n) { return SimplicialGraph(numbered(n)); }

SimplicialGraph edge() { return path(2); }

SimplicialGraph random(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  SimplicialGraph g(numbered(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

SimplicialGraph parse(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string kind = spec.substr(0, colon);
    std::size_t n = 0;
    try {
      n = std::stoul(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw FormatError("bad graph size in '" + spec + "'");
    }
    if (kind == "path") return path(n);
    if (kind == "cycle") return cycle(n);
    if (kind == "complete") return complete(n);
    if (kind == "anticlique") return anticlique(n);
    throw FormatError("unknown graph family '" + kind + "'");
  }
  if (spec == "edge") return edge();
  if (spec == "point") return anticlique(1);
  if (spec.empty() || spec == "empty") return {};
  // Explicit list: comma-separated vertices "a" or edges "a-b".
  SimplicialGraph g;
  std::stringstream ss(spec);
  std::string item;
  auto ensure = [&](const std::string& v) {
    if (v.empty()) throw FormatError("empty vertex name in '" + spec + "'");
    if (!g.find(v)) g.add_vertex(v);
    return g.index(v);
  };
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      ensure(item);
    } else {
      auto a = ensure(item.substr(0, dash));
      auto b = ensure(item.substr(dash + 1));
      g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace graphs

}  // namespace cubecx
