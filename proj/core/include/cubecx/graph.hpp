#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubecx/types.hpp"

namespace cubecx {

// Finite simplicial graph with named vertices. Vertex indices are dense and
// follow insertion order.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  explicit SimplicialGraph(std::vector<std::string> names);

  std::size_t add_vertex(std::string name);
  // Idempotent; throws on a loop.
  void add_edge(std::size_t a, std::size_t b);
  void add_edge(const std::string& a, const std::string& b);

  std::size_t order() const { return names_.size(); }
  std::size_t size() const { return edge_count_; }
  const std::string& name(std::size_t v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;
  std::size_t index(const std::string& name) const;  // throws if absent

  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a].count(b) != 0; }
  const std::set<std::size_t>& neighbours(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  SimplicialGraph induced(const std::vector<std::size_t>& vertices) const;
  SimplicialGraph complement() const;

  // Same vertex names and the same edges between names.
  bool same_as(const SimplicialGraph& other) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::set<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

// Bron–Kerbosch with pivoting; throws CapExceeded past `cap` cliques.
std::vector<std::vector<std::size_t>> maximal_cliques(const SimplicialGraph& g,
                                                      std::size_t cap = 1'000'000);
// Every clique with min_size <= |K| <= max_size, each sorted, in lexicographic order.
std::vector<std::vector<std::size_t>> all_cliques(const SimplicialGraph& g, std::size_t min_size,
                                                  std::size_t max_size);
// Maximal independent sets = maximal cliques of the complement.
std::vector<std::vector<std::size_t>> maximal_independent_sets(const SimplicialGraph& g,
                                                               std::size_t cap);

std::vector<std::size_t> component_labels(const SimplicialGraph& g);

// Vertex map a -> b witnessing an isomorphism, if any.
std::optional<std::vector<std::size_t>> find_graph_isomorphism(const SimplicialGraph& a,
                                                               const SimplicialGraph& b);
inline bool graphs_isomorphic(const SimplicialGraph& a, const SimplicialGraph& b) {
  return find_graph_isomorphism(a, b).has_value();
}

namespace graphs {
SimplicialGraph path(std::size_t n);
SimplicialGraph cycle(std::size_t n);
SimplicialGraph complete(std::size_t n);
SimplicialGraph anticlique(std::size_t n);
SimplicialGraph edge();
SimplicialGraph random(std::size_t n, double p, std::uint64_t seed);
// "cycle:5", "path:3", "complete:4", "anticlique:2", "edge", "point",
// or an explicit "a-b,b-c,d" list.
SimplicialGraph parse(const std::string& spec);
}  // namespace graphs

}  // namespace cubecx
