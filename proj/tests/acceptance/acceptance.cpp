// Acceptance run: one PASS/FAIL line per criterion. Pass criterion numbers
// as arguments to run a subset ("acceptance 7").
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubecx/collapse.hpp"
#include "cubecx/completion.hpp"
#include "cubecx/divisibility.hpp"
#include "cubecx/fixpoints.hpp"
#include "cubecx/generators.hpp"
#include "cubecx/host.hpp"
#include "cubecx/isomorphism.hpp"
#include "cubecx/topology.hpp"
#include "small_complexes.hpp"

using namespace cubecx;

namespace {

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;
  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok) failures.push_back(what);
  }
};

struct Entry {
  std::string name;
  CubeComplex complex;
  std::optional<DividingPattern> pattern;
};

std::vector<Entry> corpus() {
  std::vector<Entry> out;
  for (const auto& n : fixture_names()) {
    auto f = fixture(n);
    out.push_back({n, f.complex, f.pattern});
  }
  for (const auto& [n, g] : std::vector<std::pair<std::string, SimplicialGraph>>{
           {"droms-edge", graphs::edge()},
           {"droms-anticlique2", graphs::anticlique(2)},
           {"droms-P3", graphs::path(3)},
           {"droms-K3", graphs::complete(3)},
           {"droms-anticlique3", graphs::anticlique(3)}}) {
    auto pc = droms(g);
    out.push_back({n, pc.complex, pc.pattern});
  }
  for (const auto& [n, g, k] : std::vector<std::tuple<std::string, SimplicialGraph, std::size_t>>{
           {"uc2-C5", graphs::cycle(5), 2}, {"uc2-P4", graphs::path(4), 2}, {"uc2-C4", graphs::cycle(4), 2}}) {
    auto pc = configuration_space(g, k);
    out.push_back({n, pc.complex, pc.pattern});
  }
  using namespace cubecx::testing;
  out.push_back({"point", point(), std::nullopt});
  out.push_back({"interval", interval(), std::nullopt});
  out.push_back({"square", lone_square(), std::nullopt});
  out.push_back({"torus", one_vertex_torus(), std::nullopt});
  out.push_back({"cycle4", cycle_complex(4), std::nullopt});
  out.push_back({"cycle5", cycle_complex(5), std::nullopt});
  out.push_back({"cube-shell", cube_shell(0x3f), std::nullopt});
  out.push_back({"cube", flag_fill(cube_shell(0x3f)), std::nullopt});
  out.push_back({"three-faces", cube_shell(0x07), std::nullopt});
  // strong patterns where available
  for (auto& e : out) {
    if (e.pattern || !is_special(e.complex).special) continue;
    HyperplaneStructure hs(e.complex);
    if (auto p = strong_pattern(e.complex, hs)) {
      e.complex = with_colouring_labels(e.complex, hs, p->colouring);
      e.pattern = std::move(p);
    }
  }
  return out;
}

bool cell_counts_equal(const CubeComplex& a, const CubeComplex& b) {
  if (a.dimension() != b.dimension()) return false;
  for (int k = 0; k <= std::max(a.dimension(), 0); ++k)
    if (a.num_cells(k) != b.num_cells(k)) return false;
  return true;
}

std::string sizes_string(const std::multiset<std::size_t>& s) {
  std::ostringstream o;
  for (auto x : s) o << x << ' ';
  return o.str();
}

// ---------------------------------------------------------------- 1

void fixtures_verdicts(Check& ck) {
  using clock = std::chrono::steady_clock;
  auto timed = [&](const std::string& name, const std::function<void()>& body) {
    auto t0 = clock::now();
    body();
    double s = std::chrono::duration<double>(clock::now() - t0).count();
    ck.expect(s < 1.0, name + " took " + std::to_string(s) + " s");
  };
  timed("fig3-left", [&] {
    auto fx = fixture("fig3-left");
    HyperplaneStructure hs(fx.complex);
    ck.expect(!is_strongly_divisible(fx.complex, hs).strongly_divisible, "fig3-left strongly divisible");
    ck.expect(decide_divisible_exhaustive(fx.complex, hs).verdict == Verdict::yes, "fig3-left not divisible");
  });
  timed("fig3-middle", [&] {
    auto fx = fixture("fig3-middle");
    HyperplaneStructure hs(fx.complex);
    ck.expect(decide_divisible_exhaustive(fx.complex, hs).verdict == Verdict::no, "fig3-middle verdict not 'no'");
  });
  timed("fig3-right", [&] {
    auto fx = fixture("fig3-right");
    const auto& c = fx.complex;
    HyperplaneStructure hs(c);
    ck.expect(is_special(c, hs).special, "fig3-right not special");
    ck.expect(hs.size() == 2, "fig3-right has " + std::to_string(hs.size()) + " hyperplanes");
    ck.expect(graphs_isomorphic(crossing_graph(hs), graphs::edge()), "fig3-right hyperplanes not transverse");
    auto x = c.vertex("x"), y = c.vertex("y");
    // the two hyperplanes cross, so the only disjoint families are singletons
    for (HyperplaneId h : {0u, 1u}) {
      auto comp = components_without(c, hs, {h});
      ck.expect(comp[x] == comp[y], "fig3-right pair separated");
    }
    {
      auto comp = components_without(c, hs, {});
      ck.expect(comp[x] == comp[y], "fig3-right disconnected");
    }
    ck.expect(!is_strongly_divisible(c, hs).strongly_divisible, "fig3-right strongly divisible");
  });
}

// ---------------------------------------------------------------- 2

void droms_pipeline(Check& ck) {
  for (const auto& [name, g] : std::vector<std::pair<std::string, SimplicialGraph>>{
           {"edge", graphs::edge()}, {"anticlique2", graphs::anticlique(2)}, {"P3", graphs::path(3)}}) {
    auto pc = droms(g);
    const auto& q = pc.complex;
    std::size_t nv = g.order();
    std::map<int, std::size_t> want{{0, std::size_t{1} << nv}};
    for (const auto& k : all_cliques(g, 1, nv)) want[int(k.size())] += std::size_t{1} << (nv - k.size());
    for (const auto& [k, n] : want)
      ck.expect(q.num_cells(k) == n, name + ": " + std::to_string(k) + "-cells " + std::to_string(q.num_cells(k)) +
                                         " != " + std::to_string(n));
    ck.expect(q.dimension() == want.rbegin()->first, name + ": dimension");
    HyperplaneStructure hs(q);
    ck.expect(is_strongly_divisible(q, hs).strongly_divisible, name + ": not strongly divisible");
    auto b = build_host(q, pc.pattern);
    auto rep = verify_host(b);
    std::string msg;
    for (const auto& m : rep.messages) msg += " " + m;
    ck.expect(rep.ok(), name + ": host checks" + msg);
    auto x = build_extended_host(b, 2);
    auto fs = fixed_set(x.extended->complex, {x.extended->phi});
    auto seed = fs.complex.vertex(x.host.vertex_name(x.embedding_j.vertex_map[0]));
    auto comp = component_of(fs.complex, seed);
    ck.expect(is_isomorphic(comp.complex, q).has_value(), name + ": fixed component not Q");
  }
}

// ---------------------------------------------------------------- 3

void braid_pipeline(Check& ck) {
  auto g = graphs::cycle(5);
  auto uc = configuration_space(g, 2);
  auto b = build_host(uc.complex, uc.pattern);
  ck.expect(b.e_complex.num_vertices() == 32, "E has " + std::to_string(b.e_complex.num_vertices()) + " vertices");
  ck.expect(b.e_complex.dimension() == 5 && b.e_complex.num_cells(5) == 1, "E is not the 5-cube");
  ck.expect(is_median_graph(b.e_complex).median, "E not median");
  auto rep = verify_host(b);
  ck.expect(rep.ok(), "host checks");
  auto x = build_extended_host(b, 2);
  auto fs = fixed_set(x.extended->complex, {x.extended->phi});
  auto comps = components(fs.complex);
  std::multiset<std::size_t> sizes;
  for (const auto& s : comps) sizes.insert(s.complex.num_vertices());
  ck.expect(sizes == std::multiset<std::size_t>{1, 5, 10, 10, 5, 1}, "component sizes " + sizes_string(sizes));
  auto seed = fs.complex.vertex(x.host.vertex_name(x.embedding_j.vertex_map[0]));
  ck.expect(is_isomorphic(component_of(fs.complex, seed).complex, uc.complex).has_value(),
            "component through j(Q) not UC_2");
  // UC_n ≅ UC_{5-n}, so each matches two components
  for (std::size_t n = 0; n <= 5; ++n) {
    auto want = configuration_space(g, n).complex;
    std::size_t hits = 0;
    for (const auto& s : comps) hits += is_isomorphic(s.complex, want).has_value();
    ck.expect(hits == 2, "UC_" + std::to_string(n) + " matches " + std::to_string(hits) + " components");
  }
}

// ---------------------------------------------------------------- 4

SimplicialGraph hexagon_with_partitions() {
  SimplicialGraph g;
  for (const auto* v : {"b1", "r1", "b2", "r2", "b3", "r3", "B", "R"}) g.add_vertex(v);
  const char* hex[] = {"b1", "r1", "b2", "r2", "b3", "r3"};
  for (int i = 0; i < 6; ++i) g.add_edge(hex[i], hex[(i + 1) % 6]);
  for (const auto* r : {"r1", "r2", "r3"}) g.add_edge("B", r);
  for (const auto* b : {"b1", "b2", "b3"}) g.add_edge("R", b);
  g.add_edge("B", "R");
  return g;
}

void genus2_pipeline(Check& ck) {
  auto fx = fixture("genus2");
  const auto& q = fx.complex;
  HyperplaneStructure hs(q);
  ck.expect(euler_characteristic(q) == -2, "chi = " + std::to_string(euler_characteristic(q)));
  ck.expect(graphs_isomorphic(crossing_graph(hs), graphs::cycle(6)), "crossing graph not C6");
  auto gh = extended_crossing_graph(hs, *fx.pattern);
  ck.expect(graphs_isomorphic(gh, hexagon_with_partitions()), "extended crossing graph is not the expected 8-vertex graph");
  auto b = build_host(q, *fx.pattern);
  ck.expect(graphs_isomorphic(crossing_graph(b.host), gh), "host crossing graph != extended crossing graph");
  ck.expect(verify_host(b).ok(), "host checks");

  auto x = build_extended_host(b, 2);
  const auto& ex = *x.extended;
  HyperplaneStructure xs(ex.complex);
  std::vector<HyperplaneId> drop;
  for (HyperplaneId h = 0; h < xs.size(); ++h) {
    auto l = label_letter(*ex.complex.label(2 * xs[h].edges.front()));
    if (l.size() > 2 && l.substr(l.size() - 2) == "^1") drop.push_back(h);
  }
  ck.expect(drop.size() == fx.pattern->partitions.size(), "wrong number of H^1 hyperplanes");
  auto col = collapse(ex.complex, drop);
  auto sal = salvetti(b.gamma_hat);
  ck.expect(cell_counts_equal(col.complex, sal), "collapse cell counts differ from Salvetti");
  ck.expect(is_isomorphic(col.complex, sal).has_value(), "collapse not isomorphic to Salvetti");

  auto fs = fixed_set(ex.complex, {ex.phi});
  auto seed = fs.complex.vertex(x.host.vertex_name(x.embedding_j.vertex_map[0]));
  ck.expect(is_isomorphic(component_of(fs.complex, seed).complex, q).has_value(), "fixed component not Q2");
}

// ---------------------------------------------------------------- 5

void completion_suite(Check& ck) {
  for (const auto& [name, q] : std::vector<std::pair<std::string, CubeComplex>>{
           {"fig3-right", fixture("fig3-right").complex}, {"4-cycle", droms(graphs::anticlique(2)).complex}}) {
    auto b = canonical_completion(q);
    auto rep = verify_completion(b);
    std::string msg;
    for (const auto& m : rep.messages) msg += " " + m;
    ck.expect(rep.ok(), name + ": completion checks" + msg);
    auto g3 = octahedralisation(b.gamma, 3);
    for (VertexId v = 0; v < b.completed.num_vertices(); ++v)
      ck.expect(graphs_isomorphic(link_graph(b.completed, v), g3), name + ": link not Gamma[3]");
    ck.expect(b.phi.power(6).is_identity(), name + ": Phi^6 != id");
    ck.expect(6 % b.phi.order() == 0, name + ": Phi order " + std::to_string(b.phi.order()));
    auto fs = fixed_set(b.completed, {b.phi});
    ck.expect(is_isomorphic(fs.complex, b.base, true).has_value(), name + ": Fix != Q");
    ck.expect(fs.complex.num_vertices() == q.num_vertices() && fs.complex.num_edges() == q.num_edges(),
              name + ": Fix cell counts");
    ck.expect(b.degree == q.num_vertices(), name + ": degree " + std::to_string(b.degree));
    auto cov = check_covering(b.completed, *b.salvetti, *b.covering);
    ck.expect(cov.covering && cov.degree == q.num_vertices(), name + ": covering " + cov.reason);
  }
  auto q = droms(graphs::anticlique(2)).complex;
  auto b = canonical_completion_racg(q, {0});
  ck.expect(b.warnings.empty(), "racg: cover disconnected");
  auto rep = verify_completion(b);
  ck.expect(rep.ok(), "racg: completion checks");
  auto target = half_octahedralisation(crossing_graph(q), 3);
  for (VertexId v = 0; v < b.completed.num_vertices(); ++v)
    ck.expect(graphs_isomorphic(link_graph(b.completed, v), target), "racg: link not Gamma[3/2]");
  ck.expect(b.degree == 2 * q.num_vertices(), "racg: degree " + std::to_string(b.degree));
  auto fs = fixed_set(b.completed, {b.phi});
  ck.expect(is_isomorphic(fs.complex, b.base, true).has_value(), "racg: Fix != Q2");
}

// ---------------------------------------------------------------- 6

void oracle_equivalences(Check& ck) {
  auto entries = corpus();
  std::size_t compared = 0, sets = 0;
  for (const auto& e : entries) {
    const auto& c = e.complex;
    if (!is_special(c).special) continue;
    HyperplaneStructure hs(c);
    if (hs.size() <= 8) {
      ++compared;
      ck.expect(is_strongly_divisible(c, hs).strongly_divisible == strongly_divisible_naive(c, hs).strongly_divisible,
                e.name + ": strong divisibility disagrees with naive search");
    }
  }
  ck.expect(compared >= 10, "too few strong-divisibility comparisons");

  for (const auto& e : entries) {
    const auto& c = e.complex;
    HyperplaneStructure hs(c);
    std::size_t n = hs.size();
    if (n > 12) continue;
    for (std::size_t k = 2; k <= 3; ++k) {
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + std::min(k, n), true);
      if (k > n) continue;
      do {
        std::vector<HyperplaneId> sub;
        for (std::size_t i = 0; i < n; ++i)
          if (pick[i]) sub.push_back(HyperplaneId(i));
        std::optional<CubeComplex> ref;
        bool agree = true;
        do {
          try {
            auto r = collapse(c, sub).complex;
            if (!ref) ref = std::move(r);
            else agree &= is_isomorphic(*ref, r, true).has_value();
          } catch (const NotCarrierRetract&) {
          }
        } while (std::next_permutation(sub.begin(), sub.end()));
        if (ref) ++sets;
        ck.expect(agree, e.name + ": collapse depends on order");
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  ck.expect(sets >= 20, "too few collapsible sets: " + std::to_string(sets));

  std::size_t hosts = 0;
  for (const auto& e : entries) {
    if (!e.pattern) continue;
    HostOptions fill;
    fill.squares_then_fill = true;
    for (bool full : {false, true}) {
      if (full && e.pattern->partitions.size() > 6) continue;
      HostOptions a, f = fill;
      a.full_cube = f.full_cube = full;
      auto ha = build_host(e.complex, *e.pattern, a).host;
      auto hf = build_host(e.complex, *e.pattern, f).host;
      ++hosts;
      ck.expect(cell_counts_equal(ha, hf) && is_isomorphic(ha, hf, true).has_value(),
                e.name + (full ? " (full cube)" : "") + ": clique and flag-fill hosts differ");
    }
  }
  ck.expect(hosts >= 10, "too few hosts");
}

// ---------------------------------------------------------------- 7

void property_suites(Check& ck) {
  for (const auto& e : corpus()) {
    if (!e.pattern) continue;
    for (bool full : {false, true}) {
      if (full && e.pattern->partitions.size() > 8) continue;
      auto m = build_e_complex(e.complex, *e.pattern, full);
      auto r = is_median_graph(m);
      ck.expect(r.median, e.name + ": E not median " + r.reason);
    }
  }
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = graphs::random(2 + seed % 5, 0.5, seed);
    ck.expect(graphs_isomorphic(half_octahedralisation(g, 1), g), "G[1/2] != G, seed " + std::to_string(seed));
    for (std::size_t n = 1; n <= 3; ++n)
      ck.expect(graphs_isomorphic(octahedralisation(half_octahedralisation(g, n), 1), octahedralisation(g, n)),
                "G[N/2][1] != G[N], seed " + std::to_string(seed) + " N " + std::to_string(n));
  }
  std::vector<SimplicialGraph> gs = {graphs::edge(), graphs::path(3), graphs::path(4), graphs::cycle(4),
                                     graphs::cycle(5), graphs::complete(3), graphs::complete(4),
                                     graphs::parse("c-a,c-b,c-d"), crossing_graph(fixture("genus2").complex)};
  for (const auto& g : gs) {
    for (std::size_t n = 0; n <= g.order(); ++n) {
      auto a = configuration_space(g, n).complex, b = configuration_space(g, g.order() - n).complex;
      ck.expect(is_isomorphic(a, b).has_value(), "UC_" + std::to_string(n) + " on " + std::to_string(g.order()) +
                                                     " vertices not symmetric");
    }
  }
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all = {
      {1, "fixture verdicts", 3.0, fixtures_verdicts},
      {2, "Droms pipeline", 10.0, droms_pipeline},
      {3, "braid pipeline on C5, n = 2", 60.0, braid_pipeline},
      {4, "genus-2 pipeline", 30.0, genus2_pipeline},
      {5, "completion suite", 10.0, completion_suite},
      {6, "oracle equivalences", 300.0, oracle_equivalences},
      {7, "property suites", 120.0, property_suites},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.id)) continue;
    Check ck;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.failures.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= c.limit_s) ck.failures.push_back("over time budget");
    bool ok = ck.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%zu checks, %.2f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), ck.count, s);
    for (const auto& f : ck.failures) std::printf("    %s\n", f.c_str());
  }
  return failed == 0 ? 0 : 1;
}
