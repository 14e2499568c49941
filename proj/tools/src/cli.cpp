#include "cubecx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "cubecx/collapse.hpp"
#include "cubecx/colouring.hpp"
#include "cubecx/completion.hpp"
#include "cubecx/divisibility.hpp"
#include "cubecx/fixpoints.hpp"
#include "cubecx/generators.hpp"
#include "cubecx/host.hpp"
#include "cubecx/hyperplanes.hpp"
#include "cubecx/io.hpp"
#include "cubecx/isomorphism.hpp"
#include "cubecx/topology.hpp"

namespace cubecx::cli {

namespace {

using io::Json;

struct Input {
  std::string type;  // complex, host, graph, automorphism
  io::ComplexDocument doc;
  std::optional<HostBundle> host;
  std::optional<SimplicialGraph> graph;
  Json raw;
};

class Session {
 public:
  Session(PipelineConfig cfg, std::ostream& out) : cfg_(std::move(cfg)), out_(out) {}

  PipelineConfig& cfg() { return cfg_; }

  template <class T>
  void note(const std::string& key, const T& value) {
    report_[key] = value;
    std::ostringstream s;
    if constexpr (std::is_same_v<T, bool>)
      s << (value ? "yes" : "no");
    else if constexpr (std::is_same_v<T, Json>)
      s << value.dump();
    else
      s << value;
    lines_.push_back(key + ": " + s.str());
  }
  void message(const std::string& m) {
    report_["messages"].push_back(m);
    lines_.push_back("  " + m);
  }

  void flush() {
    if (silent_) return;
    if (cfg_.json) {
      out_ << report_.dump(2) << "\n";
    } else {
      for (const auto& l : lines_) out_ << l << "\n";
    }
  }

  // Artifact: written atomically with -o, printed otherwise (and the
  // report suppressed) when `print_if_no_output`.
  void artifact(const Json& doc, bool print_if_no_output = false) {
    if (cfg_.output) {
      io::write_atomic(*cfg_.output, doc.dump(2) + "\n");
      note("output", *cfg_.output);
    } else if (print_if_no_output) {
      out_ << doc.dump(2) << "\n";
      silent_ = true;
    }
  }
  // Raw output in place of the report.
  void print(const std::string& text) {
    out_ << text;
    silent_ = true;
  }
  void dot(const std::string& text) {
    if (!cfg_.dot) return;
    io::write_atomic(*cfg_.dot, text);
    note("dot", *cfg_.dot);
  }

  Input load(std::size_t which = 0) const {
    Input in;
    if (cfg_.fixture && which == 0) {
      auto f = fixture(*cfg_.fixture);
      in.type = "complex";
      in.doc = {f.name, f.complex, f.colouring, f.pattern};
      return in;
    }
    std::size_t at = cfg_.fixture ? which - 1 : which;
    if (at >= cfg_.inputs.size()) throw FormatError("missing input file");
    in.raw = io::read_json(cfg_.inputs[at]);
    in.type = io::check_document(in.raw);
    if (in.type == "complex") {
      in.doc = io::complex_document_from_json(in.raw);
    } else if (in.type == "host") {
      in.host = io::host_from_json(in.raw);
    } else if (in.type == "graph") {
      in.graph = io::graph_from_json(in.raw.at("graph"));
    } else if (in.type != "automorphism") {
      throw FormatError("unsupported document type " + in.type);
    }
    return in;
  }

  // The complex an input stands for: hosts give their (extended) host.
  CubeComplex complex_of(const Input& in) const {
    if (in.type == "complex") return in.doc.complex;
    if (in.host) return in.host->extended ? in.host->extended->complex : in.host->host;
    throw FormatError("input is not a complex");
  }

  DivisibilityCaps caps() const {
    DivisibilityCaps c;
    c.colourings = cfg_.cap_colourings;
    c.independent_sets = cfg_.cap_independent_sets;
    c.zero_sets = cfg_.cap_independent_sets;
    return c;
  }

 private:
  PipelineConfig cfg_;
  std::ostream& out_;
  Json report_ = Json::object();
  std::vector<std::string> lines_;
  bool silent_ = false;
};

std::vector<HyperplaneId> hyperplane_list(const CubeComplex& c, const HyperplaneStructure& hs,
                                          const std::vector<std::string>& names) {
  std::vector<HyperplaneId> out;
  for (const auto& n : names) {
    auto h = hs.find(c, n);
    if (!h) throw FormatError("unknown hyperplane " + n);
    out.push_back(*h);
  }
  return out;
}

Json graph_document(const SimplicialGraph& g) {
  auto j = io::document("graph");
  j["graph"] = io::graph_json(g);
  return j;
}

int status_of(Verdict v) {
  switch (v) {
    case Verdict::yes: return ok;
    case Verdict::no: return negative;
    case Verdict::inconclusive: return inconclusive;
  }
  return input_error;
}

// ---- subcommands ----

int cmd_build(Session& s, const std::string& kind, const std::string& arg, const std::vector<std::string>& hyps) {
  io::ComplexDocument doc;
  if (kind == "fixture") {
    auto f = fixture(arg);
    doc = {f.name, f.complex, f.colouring, f.pattern};
  } else if (kind == "droms" || kind == "uc") {
    auto g = graphs::parse(arg);
    auto pc = kind == "droms" ? droms(g) : configuration_space(g, s.cfg().n);
    doc.name = kind + ":" + arg;
    doc.complex = pc.complex;
    doc.colouring = pc.pattern.colouring;
    if (kind == "droms" || (s.cfg().n >= 2 && s.cfg().n + 2 <= g.order())) doc.pattern = pc.pattern;
  } else if (kind == "salvetti") {
    doc = {"salvetti:" + arg, salvetti(graphs::parse(arg)), std::nullopt, std::nullopt};
  } else if (kind == "double-cover") {
    auto q = io::complex_document_from_json(io::read_json(arg)).complex;
    HyperplaneStructure hs(q);
    auto dc = double_cover(q, hyperplane_list(q, hs, hyps));
    s.note("connected", dc.connected);
    doc = {"double-cover", dc.complex, std::nullopt, std::nullopt};
  } else if (kind == "octa" || kind == "half-octa" || kind == "graph") {
    auto g = graphs::parse(arg);
    if (kind != "graph") g = kind == "octa" ? octahedralisation(g, s.cfg().n) : half_octahedralisation(g, s.cfg().n);
    s.dot(io::export_dot(g));
    s.artifact(graph_document(g), true);
    return ok;
  } else {
    throw FormatError("unknown build kind " + kind);
  }
  s.note("vertices", doc.complex.num_vertices());
  s.note("edges", doc.complex.num_edges());
  s.dot(io::export_dot(doc.complex));
  s.artifact(io::complex_document(doc), true);
  return ok;
}

int cmd_check(Session& s, const std::string& what) {
  auto in = s.load();
  auto c = s.complex_of(in);
  if (what == "valid") {
    auto r = validate_complex(c);
    s.note("valid", r.ok());
    for (const auto& v : r.violations) s.message(v.kind + ": " + v.message);
    return r.ok() ? ok : negative;
  }
  HyperplaneStructure hs(c);
  if (what == "special") {
    auto r = is_special(c, hs);
    s.note("special", r.special);
    s.note("hyperplanes", hs.size());
    s.note("crossings", hs.crossings().size());
    s.note("indirect_self_osculations", r.indirect_self_osculations.size());
    if (!r.special) s.message(r.describe(c, hs));
    return r.special ? ok : negative;
  }
  if (what == "npc") {
    auto r = is_npc(c);
    s.note("npc", r.npc);
    if (!r.npc) s.message(r.reason);
    return r.npc ? ok : negative;
  }
  if (what == "median") {
    auto r = is_median_graph(c);
    s.note("median", r.median);
    if (!r.median) s.message(r.reason);
    return r.median ? ok : negative;
  }
  throw FormatError("unknown check " + what);
}

int cmd_colour(Session& s, const std::string& what) {
  auto in = s.load();
  auto doc = in.doc;
  if (in.type != "complex") throw FormatError("colour needs a complex document");
  HyperplaneStructure hs(doc.complex);
  if (what == "standard") {
    doc.colouring = standard_colouring(doc.complex, hs);
    doc.pattern.reset();
    s.note("colours", doc.colouring->num_colours());
    s.artifact(io::complex_document(doc));
    return ok;
  }
  if (what == "validate") {
    if (!doc.colouring) throw FormatError("document carries no colouring");
    auto r = validate_colouring(doc.complex, hs, *doc.colouring);
    s.note("special", r.special());
    s.note("minimal", r.minimal());
    for (const auto& w : r.witnesses) s.message("(" + std::to_string(w.condition) + ") " + w.message);
    return r.minimal() ? ok : negative;
  }
  if (what == "enumerate") {
    EnumerationOptions opts;
    opts.cap = s.cfg().cap_colourings;
    std::vector<std::size_t> sizes;
    enumerate_minimal_colourings(doc.complex, hs, opts, [&](const SpecialColouring& col) {
      sizes.push_back(col.num_colours());
      return true;
    });
    s.note("colourings", sizes.size());
    s.note("colour_counts", Json(sizes));
    return ok;
  }
  throw FormatError("unknown colour action " + what);
}

int cmd_divide(Session& s, const std::string& what) {
  auto in = s.load();
  if (in.type != "complex") throw FormatError("divide needs a complex document");
  auto doc = in.doc;
  HyperplaneStructure hs(doc.complex);
  if (what == "strong") {
    auto r = is_strongly_divisible(doc.complex, hs, s.cfg().cap_independent_sets);
    s.note("strongly_divisible", r.strongly_divisible);
    s.note("families", r.families);
    if (r.witness) {
      std::vector<std::string> names;
      for (const auto& h : hs.all()) names.push_back(h.name);
      s.message(r.witness->describe(doc.complex, names));
    }
    return r.strongly_divisible ? ok : negative;
  }
  if (what == "decide") {
    auto r = decide_divisible_exhaustive(doc.complex, hs, s.caps());
    s.note("verdict", std::string(to_string(r.verdict)));
    s.note("colourings_examined", r.colourings_examined);
    if (!r.note.empty()) s.message(r.note);
    if (r.pattern) {
      s.note("partitions", r.pattern->partitions.size());
      doc.colouring = r.pattern->colouring;
      doc.pattern = r.pattern;
      s.artifact(io::complex_document(doc));
    }
    return status_of(r.verdict);
  }
  if (what == "validate") {
    if (!doc.pattern) throw FormatError("document carries no pattern");
    auto r = validate_pattern(doc.complex, hs, *doc.pattern);
    s.note("valid", r.ok());
    for (const auto& w : r.witnesses) s.message("(" + w.condition + ") " + w.message);
    return r.ok() ? ok : negative;
  }
  throw FormatError("unknown divide action " + what);
}

void note_host(Session& s, const HostReport& r) {
  s.note("special", r.special);
  s.note("crossing_graph", r.crossing_graph);
  s.note("salvetti", r.salvetti);
  s.note("locally_convex", r.locally_convex);
  s.note("colour_edges_in_q", r.colour_edges_in_q);
  s.note("injective", r.injective);
  for (const auto& m : r.messages) s.message(m);
}

int cmd_host(Session& s, const std::string& what, const HostOptions& opts) {
  auto in = s.load();
  if (what == "build") {
    if (in.type != "complex") throw FormatError("host build needs a complex document");
    auto p = in.doc.pattern;
    if (!p) {
      HyperplaneStructure hs(in.doc.complex);
      auto r = decide_divisible_exhaustive(in.doc.complex, hs, s.caps());
      s.note("verdict", std::string(to_string(r.verdict)));
      if (!r.pattern) return status_of(r.verdict);
      p = r.pattern;
    }
    auto b = build_host(in.doc.complex, *p, opts);
    auto r = verify_host(b);
    s.note("host_vertices", b.host.num_vertices());
    s.note("host_edges", b.host.num_edges());
    note_host(s, r);
    s.dot(io::export_dot(b.gamma_hat));
    s.artifact(io::host_json(b));
    return r.ok() ? ok : negative;
  }
  if (!in.host) throw FormatError("host " + what + " needs a host bundle");
  auto& b = *in.host;
  if (what == "verify") {
    auto r = verify_host(b);
    note_host(s, r);
    return r.ok() ? ok : negative;
  }
  if (what == "extend") {
    b = build_extended_host(std::move(b), s.cfg().n);
    s.note("n", s.cfg().n);
    s.note("hyperplane_classes", b.extended->graph.order());
    s.note("vertices", b.extended->complex.num_vertices());
    s.note("edges", b.extended->complex.num_edges());
    s.dot(io::export_dot(b.extended->graph));
    s.artifact(io::host_json(b));
    return ok;
  }
  throw FormatError("unknown host action " + what);
}

int cmd_fix(Session& s, bool phi, const std::optional<std::string>& automorphism, bool component_only) {
  auto in = s.load();
  CubeComplex ambient;
  std::vector<CubicalAutomorphism> gens;
  std::optional<CubeComplex> base;
  std::optional<VertexId> seed;
  if (phi) {
    if (!in.host || !in.host->extended) throw FormatError("fix --phi needs an extended host bundle");
    const auto& b = *in.host;
    ambient = b.extended->complex;
    gens.push_back(host_automorphism(b));
    base = b.base;
    seed = b.embedding_j.vertex_map.empty() ? std::nullopt : std::optional<VertexId>(b.embedding_j.vertex_map[0]);
  } else {
    if (!automorphism) throw FormatError("fix needs --phi or --automorphism");
    ambient = s.complex_of(in);
    auto j = io::read_json(*automorphism);
    io::check_document(j, "automorphism");
    gens.push_back(io::automorphism_from_json(j.at("automorphism"), ambient));
  }
  HyperplaneStructure hs(ambient);
  auto order = gens.front().order(s.cfg().cap_group_order);
  s.note("order", order);
  s.note("inverted_hyperplanes", inverted_hyperplanes(ambient, hs, gens, s.cfg().cap_group_order).size());
  auto fs = fixed_set(ambient, gens);
  auto comps = components(fs.complex);
  std::vector<std::size_t> sizes;
  for (const auto& c : comps) sizes.push_back(c.complex.num_vertices());
  s.note("components", comps.size());
  s.note("component_vertices", Json(sizes));
  CubeComplex out = fs.complex;
  if (base && seed) {
    auto v = fs.complex.find_vertex(ambient.vertex_name(*seed));
    if (!v) throw InternalConsistencyError("j(Q) vertex is not fixed");
    auto comp = component_of(fs.complex, *v);
    bool iso = is_isomorphic(comp.complex, *base).has_value();
    s.note("base_component_isomorphic", iso);
    if (component_only) out = comp.complex;
  }
  s.artifact(io::complex_document({"fixed-set", out, std::nullopt, std::nullopt}));
  return ok;
}

int cmd_complete(Session& s, const std::string& kind, const std::vector<std::string>& hyps) {
  auto in = s.load();
  auto q = s.complex_of(in);
  CompletionBundle b;
  if (kind == "raag") {
    b = canonical_completion(q);
  } else if (kind == "racg") {
    HyperplaneStructure hs(q);
    b = canonical_completion_racg(q, hyperplane_list(q, hs, hyps));
  } else {
    throw FormatError("unknown completion kind " + kind);
  }
  auto r = verify_completion(b);
  s.note("vertices", b.completed.num_vertices());
  s.note("edges", b.completed.num_edges());
  s.note("special", r.special);
  s.note("links", r.links);
  s.note("locally_convex", r.locally_convex);
  s.note("phi_order", r.phi_order_value);
  s.note("fix_is_base", r.fix_is_base);
  s.note("covering", r.covering);
  s.note("degree", r.degree);
  for (const auto& w : b.warnings) s.message("warning: " + w);
  for (const auto& m : r.messages) s.message(m);
  s.artifact(io::complex_document({"completion", b.completed, std::nullopt, std::nullopt}));
  return r.ok() ? ok : negative;
}

int cmd_collapse(Session& s, const std::vector<std::string>& hyps) {
  auto in = s.load();
  auto c = s.complex_of(in);
  HyperplaneStructure hs(c);
  auto ids = hyperplane_list(c, hs, hyps);
  CollapseResult r;
  try {
    r = collapse(c, ids);
  } catch (const NotCarrierRetract& e) {
    s.note("collapsed", false);
    s.message(e.what());
    return negative;
  }
  s.note("collapsed", true);
  s.note("vertices", r.complex.num_vertices());
  s.note("edges", r.complex.num_edges());
  s.artifact(io::complex_document({"collapse", r.complex, std::nullopt, std::nullopt}));
  return ok;
}

int cmd_iso(Session& s, bool labels) {
  auto a = s.load(0), b = s.load(1);
  if (a.graph && b.graph) {
    bool iso = graphs_isomorphic(*a.graph, *b.graph);
    s.note("isomorphic", iso);
    return iso ? ok : negative;
  }
  bool iso = is_isomorphic(s.complex_of(a), s.complex_of(b), labels).has_value();
  s.note("isomorphic", iso);
  return iso ? ok : negative;
}

int cmd_stats(Session& s) {
  auto in = s.load();
  if (in.graph) {
    s.note("order", in.graph->order());
    s.note("size", in.graph->size());
    return ok;
  }
  auto c = s.complex_of(in);
  HyperplaneStructure hs(c);
  s.note("vertices", c.num_vertices());
  s.note("edges", c.num_edges());
  for (int k = 2; k <= c.dimension(); ++k) s.note("cubes_" + std::to_string(k), c.num_cells(k));
  s.note("dimension", c.dimension());
  s.note("euler_characteristic", euler_characteristic(c));
  s.note("components", components(c).size());
  s.note("hyperplanes", hs.size());
  s.note("special", is_special(c, hs).special);
  s.note("npc", is_npc(c).npc);
  return ok;
}

int cmd_export(Session& s, const std::string& what) {
  auto in = s.load();
  std::string text;
  if (in.graph) {
    text = io::export_dot(*in.graph);
  } else if (what == "complex") {
    text = io::export_dot(s.complex_of(in));
  } else if (what == "crossing") {
    text = io::export_dot(crossing_graph(s.complex_of(in)));
  } else if (what == "gamma-hat") {
    if (!in.host) throw FormatError("gamma-hat export needs a host bundle");
    text = io::export_dot(in.host->extended ? in.host->extended->graph : in.host->gamma_hat);
  } else {
    throw FormatError("unknown export target " + what);
  }
  if (s.cfg().dot) {
    s.dot(text);
  } else {
    s.print(text);
  }
  return ok;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  PipelineConfig cfg;
  CLI::App app{"cube complex toolkit", "cubecx"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool with_inputs = true) {
    sub->add_flag("--json", cfg.json, "machine-readable report");
    sub->add_option("-o,--output", cfg.output, "artifact path");
    sub->add_option("--n", cfg.n, "copies N / token count")->check(CLI::PositiveNumber);
    sub->add_option("--cap-independent-sets", cfg.cap_independent_sets)->check(CLI::PositiveNumber);
    sub->add_option("--cap-colourings", cfg.cap_colourings)->check(CLI::PositiveNumber);
    sub->add_option("--cap-group-order", cfg.cap_group_order)->check(CLI::PositiveNumber);
    sub->add_option("--dot", cfg.dot, "DOT output path");
    if (with_inputs) {
      sub->add_option("--fixture", cfg.fixture, "use a built-in fixture as the first input");
      sub->add_option("inputs", cfg.inputs, "input documents");
    }
  };

  std::string what, arg;
  std::vector<std::string> hyps;
  HostOptions host_opts;
  bool phi = false, component_only = false, labels = false;
  std::optional<std::string> automorphism;

  auto* build = app.add_subcommand("build", "build a complex or graph");
  build->add_option("kind", what, "fixture|droms|salvetti|uc|double-cover|octa|half-octa|graph")->required();
  build->add_option("arg", arg, "fixture name, graph spec or input file")->required();
  build->add_option("--s", hyps, "hyperplanes switching sheets")->delimiter(',');
  common(build, false);

  auto* check = app.add_subcommand("check", "structural checks");
  check->add_option("what", what, "valid|special|npc|median")->required();
  common(check);

  auto* colour = app.add_subcommand("colour", "special colourings");
  colour->add_option("what", what, "standard|validate|enumerate")->required();
  common(colour);

  auto* divide = app.add_subcommand("divide", "dividing patterns");
  divide->add_option("what", what, "strong|decide|validate")->required();
  common(divide);

  auto* host = app.add_subcommand("host", "hosts and extended hosts");
  host->add_option("what", what, "build|verify|extend")->required();
  host->add_flag("--full-cube", host_opts.full_cube);
  host->add_flag("--squares-then-fill", host_opts.squares_then_fill);
  common(host);

  auto* fix = app.add_subcommand("fix", "fixed sets");
  fix->add_flag("--phi", phi, "use the extended host's automorphism");
  fix->add_option("--automorphism", automorphism, "automorphism document");
  fix->add_flag("--component", component_only, "keep only the component through j(Q)");
  common(fix);

  auto* complete = app.add_subcommand("complete", "canonical completions");
  complete->add_option("kind", what, "raag|racg")->required();
  complete->add_option("--s", hyps, "hyperplanes of the double cover")->delimiter(',');
  common(complete);

  auto* coll = app.add_subcommand("collapse", "collapse hyperplanes");
  coll->add_option("--hyperplanes", hyps)->delimiter(',')->required();
  common(coll);

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_flag("--labels", labels, "respect germ labels");
  common(iso);

  auto* stats = app.add_subcommand("stats", "cell counts and invariants");
  common(stats);

  auto* exp = app.add_subcommand("export", "DOT export");
  exp->add_option("--what", what, "complex|crossing|gamma-hat")->default_val("complex");
  common(exp);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  Session s(cfg, out);
  int status = input_error;
  try {
    if (*build) status = cmd_build(s, what, arg, hyps);
    else if (*check) status = cmd_check(s, what);
    else if (*colour) status = cmd_colour(s, what);
    else if (*divide) status = cmd_divide(s, what);
    else if (*host) status = cmd_host(s, what, host_opts);
    else if (*fix) status = cmd_fix(s, phi, automorphism, component_only);
    else if (*complete) status = cmd_complete(s, what, hyps);
    else if (*coll) status = cmd_collapse(s, hyps);
    else if (*iso) status = cmd_iso(s, labels);
    else if (*stats) status = cmd_stats(s);
    else if (*exp) status = cmd_export(s, what);
  } catch (const CapExceeded& e) {
    s.note("verdict", std::string("inconclusive"));
    s.message(e.what());
    s.flush();
    return inconclusive;
  } catch (const InternalConsistencyError& e) {
    err << "internal error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  s.flush();
  return status;
}

}  // namespace cubecx::cli
