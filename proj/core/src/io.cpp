#include "cubecx/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unistd.h>

namespace cubecx::io {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("field \"") + key + "\": " + e.what());
  }
}

const Json& object(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

VertexId vertex_named(const CubeComplex& c, const std::string& name) {
  auto v = c.find_vertex(name);
  if (!v) throw FormatError("unknown vertex " + name);
  return *v;
}

HyperplaneId hyperplane_named(const CubeComplex& c, const HyperplaneStructure& hs, const std::string& name) {
  auto h = hs.find(c, name);
  if (!h) throw FormatError("unknown hyperplane " + name);
  return *h;
}

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

// Fixed palette; colours cycle past its end.
const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

Json document(const std::string& type) {
  Json j;
  j["schema"] = kSchema;
  j["type"] = type;
  return j;
}

std::string check_document(const Json& j, const std::string& type) {
  auto schema = field<std::string>(j, "schema");
  const std::string prefix = "cubecx/";
  if (schema.rfind(prefix, 0) != 0) throw FormatError("not a cubecx document (schema " + schema + ")");
  int major = 0;
  try {
    major = std::stoi(schema.substr(prefix.size()));
  } catch (const std::exception&) {
    throw FormatError("bad schema version " + schema);
  }
  if (major > kSchemaMajor) throw FormatError("schema " + schema + " is newer than " + kSchema);
  if (major < 1) throw FormatError("bad schema version " + schema);
  auto t = field<std::string>(j, "type");
  if (!type.empty() && t != type) throw FormatError("expected a " + type + " document, got " + t);
  return t;
}

Json complex_json(const CubeComplex& c) {
  auto raw = to_raw(c);
  Json j;
  j["vertices"] = raw.vertices;
  Json darts = Json::array();
  for (const auto& d : raw.darts) {
    Json x;
    x["id"] = d.id;
    x["origin"] = d.origin;
    x["reverse"] = d.reverse;
    if (d.germ_label) x["label"] = *d.germ_label;
    darts.push_back(std::move(x));
  }
  j["darts"] = std::move(darts);
  j["squares"] = raw.squares;
  Json cubes = Json::object();
  for (const auto& [k, list] : raw.cubes) cubes[std::to_string(k)] = list;
  j["cubes"] = std::move(cubes);
  return j;
}

CubeComplex complex_from_json(const Json& j) {
  RawComplex raw;
  raw.vertices = field<std::vector<std::string>>(j, "vertices");
  for (const auto& d : object(j, "darts")) {
    RawDart rd;
    rd.id = field<std::string>(d, "id");
    rd.origin = field<std::string>(d, "origin");
    rd.reverse = field<std::string>(d, "reverse");
    if (d.contains("label") && !d.at("label").is_null()) rd.germ_label = field<std::string>(d, "label");
    raw.darts.push_back(std::move(rd));
  }
  if (j.contains("squares")) raw.squares = field<std::vector<std::array<std::string, 4>>>(j, "squares");
  if (j.contains("cubes"))
    for (const auto& [k, list] : j.at("cubes").items()) {
      int dim = 0;
      try {
        dim = std::stoi(k);
      } catch (const std::exception&) {
        throw FormatError("bad cube dimension " + k);
      }
      raw.cubes[dim] = list.get<std::vector<std::vector<long>>>();
    }
  return from_raw(raw);
}

Json graph_json(const SimplicialGraph& g) {
  Json j;
  j["vertices"] = g.names();
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.name(a), g.name(b)});
  j["edges"] = std::move(edges);
  return j;
}

SimplicialGraph graph_from_json(const Json& j) {
  SimplicialGraph g(field<std::vector<std::string>>(j, "vertices"));
  for (const auto& e : object(j, "edges")) {
    auto pair = e.get<std::vector<std::string>>();
    if (pair.size() != 2) throw FormatError("graph edge must have two ends");
    if (!g.find(pair[0]) || !g.find(pair[1])) throw FormatError("graph edge on unknown vertex");
    if (pair[0] == pair[1]) throw FormatError("graph loop at " + pair[0]);
    g.add_edge(pair[0], pair[1]);
  }
  return g;
}

Json colouring_json(const CubeComplex& c, const HyperplaneStructure& hs, const SpecialColouring& col) {
  Json j;
  j["graph"] = graph_json(col.graph);
  Json classes = Json::array();
  for (HyperplaneId h = 0; h < hs.size(); ++h) {
    Json x;
    x["hyperplane"] = hs[h].name;
    x["colour"] = col.graph.name(col.colour_of[h]);
    auto along = hs.darts(col.positive(h));
    x["plus"] = along.empty() ? hs[h].name : c.dart_name(along.front());
    classes.push_back(std::move(x));
  }
  j["classes"] = std::move(classes);
  return j;
}

SpecialColouring colouring_from_json(const Json& j, const CubeComplex& c, const HyperplaneStructure& hs) {
  SpecialColouring col;
  col.graph = graph_from_json(object(j, "graph"));
  col.colour_of.assign(hs.size(), kNone);
  col.flipped.assign(hs.size(), false);
  for (const auto& x : object(j, "classes")) {
    auto h = hyperplane_named(c, hs, field<std::string>(x, "hyperplane"));
    auto colour = field<std::string>(x, "colour");
    auto v = col.graph.find(colour);
    if (!v) throw FormatError("unknown colour " + colour);
    col.colour_of[h] = *v;
    auto plus = c.find_dart(field<std::string>(x, "plus"));
    if (!plus || hs.of_dart(*plus) != h) throw FormatError("\"plus\" of " + hs[h].name + " is not one of its darts");
    col.flipped[h] = hs.sign(*plus) < 0;
  }
  for (HyperplaneId h = 0; h < hs.size(); ++h)
    if (col.colour_of[h] == kNone) throw FormatError("hyperplane " + hs[h].name + " has no colour");
  return col;
}

Json pattern_json(const CubeComplex& c, const HyperplaneStructure& hs, const DividingPattern& p) {
  Json j;
  j["colouring"] = colouring_json(c, hs, p.colouring);
  Json parts = Json::array();
  for (const auto& t : p.partitions) {
    Json x;
    x["name"] = t.name;
    std::vector<std::string> zero, minus, plus;
    for (auto h : t.zero) zero.push_back(hs[h].name);
    for (VertexId v = 0; v < c.num_vertices(); ++v) {
      if (t.minus.contains(v)) minus.push_back(c.vertex_name(v));
      if (t.plus.contains(v)) plus.push_back(c.vertex_name(v));
    }
    x["zero"] = zero;
    x["minus"] = minus;
    x["plus"] = plus;
    parts.push_back(std::move(x));
  }
  j["partitions"] = std::move(parts);
  return j;
}

DividingPattern pattern_from_json(const Json& j, const CubeComplex& c, const HyperplaneStructure& hs) {
  DividingPattern p;
  p.colouring = colouring_from_json(object(j, "colouring"), c, hs);
  for (const auto& x : object(j, "partitions")) {
    Tripartition t{field<std::string>(x, "name"), {}, VertexSet(c.num_vertices()), VertexSet(c.num_vertices())};
    for (const auto& h : field<std::vector<std::string>>(x, "zero")) t.zero.push_back(hyperplane_named(c, hs, h));
    std::sort(t.zero.begin(), t.zero.end());
    t.zero.erase(std::unique(t.zero.begin(), t.zero.end()), t.zero.end());
    for (const auto& v : field<std::vector<std::string>>(x, "minus")) t.minus.insert(vertex_named(c, v));
    for (const auto& v : field<std::vector<std::string>>(x, "plus")) t.plus.insert(vertex_named(c, v));
    p.partitions.push_back(std::move(t));
  }
  return p;
}

Json automorphism_json(const CubeComplex& c, const CubicalAutomorphism& g) {
  Json j;
  Json vs = Json::object(), ds = Json::object();
  for (VertexId v = 0; v < c.num_vertices(); ++v) vs[c.vertex_name(v)] = c.vertex_name(g.vertex(v));
  for (DartId d = 0; d < c.num_darts(); ++d) ds[c.dart_name(d)] = c.dart_name(g.dart(d));
  j["vertices"] = std::move(vs);
  j["darts"] = std::move(ds);
  return j;
}

CubicalAutomorphism automorphism_from_json(const Json& j, const CubeComplex& c) {
  std::vector<VertexId> vm(c.num_vertices(), kNone);
  std::vector<DartId> dm(c.num_darts(), kNone);
  for (const auto& [from, to] : object(j, "vertices").items())
    vm[vertex_named(c, from)] = vertex_named(c, to.get<std::string>());
  for (const auto& [from, to] : object(j, "darts").items()) {
    auto a = c.find_dart(from), b = c.find_dart(to.get<std::string>());
    if (!a || !b) throw FormatError("unknown dart in automorphism");
    dm[*a] = *b;
  }
  if (std::count(vm.begin(), vm.end(), kNone) || std::count(dm.begin(), dm.end(), kNone))
    throw FormatError("automorphism does not cover every vertex and dart");
  try {
    return CubicalAutomorphism(c, std::move(vm), std::move(dm));
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("not an automorphism: ") + e.what());
  }
}

Json complex_document(const ComplexDocument& d) {
  auto j = document("complex");
  if (!d.name.empty()) j["name"] = d.name;
  j["complex"] = complex_json(d.complex);
  if (d.colouring || d.pattern) {
    HyperplaneStructure hs(d.complex);
    if (d.colouring) j["colouring"] = colouring_json(d.complex, hs, *d.colouring);
    if (d.pattern) j["pattern"] = pattern_json(d.complex, hs, *d.pattern);
  }
  return j;
}

ComplexDocument complex_document_from_json(const Json& j) {
  check_document(j, "complex");
  ComplexDocument d;
  if (j.contains("name")) d.name = field<std::string>(j, "name");
  d.complex = complex_from_json(object(j, "complex"));
  if (j.contains("colouring") || j.contains("pattern")) {
    HyperplaneStructure hs(d.complex);
    if (j.contains("colouring")) d.colouring = colouring_from_json(j.at("colouring"), d.complex, hs);
    if (j.contains("pattern")) d.pattern = pattern_from_json(j.at("pattern"), d.complex, hs);
  }
  return d;
}

Json host_json(const HostBundle& b) {
  auto j = document("host");
  j["base"] = complex_json(b.base);
  HyperplaneStructure hs(b.base);
  j["pattern"] = pattern_json(b.base, hs, b.pattern);
  j["options"] = {{"full_cube", b.options.full_cube}, {"squares_then_fill", b.options.squares_then_fill}};
  j["n"] = b.extended ? b.extended->n : 0;
  j["gamma_hat"] = graph_json(b.gamma_hat);
  j["host"] = complex_json(b.extended ? b.extended->complex : b.host);
  return j;
}

HostBundle host_from_json(const Json& j) {
  check_document(j, "host");
  auto base = complex_from_json(object(j, "base"));
  HyperplaneStructure hs(base);
  auto p = pattern_from_json(object(j, "pattern"), base, hs);
  HostOptions opts;
  if (j.contains("options")) {
    opts.full_cube = j.at("options").value("full_cube", false);
    opts.squares_then_fill = j.at("options").value("squares_then_fill", false);
  }
  auto b = build_host(base, p, opts);
  auto n = j.value("n", std::size_t{0});
  if (n >= 2) b = build_extended_host(std::move(b), n);
  if (j.contains("host")) {
    const auto& built = b.extended ? b.extended->complex : b.host;
    if (complex_json(built) != j.at("host")) throw FormatError("stored host differs from the one rebuilt from its inputs");
  }
  return b;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_atomic(const std::filesystem::path& path, const std::string& text) {
  auto dir = path.parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw FormatError("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw FormatError("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw FormatError("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

std::string export_dot(const SimplicialGraph& g, const DotOptions& opts) {
  std::ostringstream out;
  out << "digraph " << quote(opts.name) << " {\n  edge [dir=none];\n";
  for (std::size_t v = 0; v < g.order(); ++v) out << "  " << quote(g.name(v)) << ";\n";
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  for (auto [a, b] : edges) out << "  " << quote(g.name(a)) << " -> " << quote(g.name(b)) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot(const CubeComplex& c, const DotOptions& opts) {
  std::map<std::string, std::size_t> colour;
  if (opts.colour_classes)
    for (DartId d = 0; d < c.num_darts(); ++d)
      if (c.label(d)) colour.emplace(label_letter(*c.label(d)), 0);
  std::size_t next = 0;
  for (auto& [letter, i] : colour) i = next++;

  std::ostringstream out;
  out << "digraph " << quote(opts.name) << " {\n";
  for (VertexId v = 0; v < c.num_vertices(); ++v) out << "  " << quote(c.vertex_name(v)) << ";\n";
  for (DartId d = 0; d < c.num_darts(); d += 2) {
    out << "  " << quote(c.vertex_name(c.origin(d))) << " -> " << quote(c.vertex_name(c.terminus(d))) << " [label="
        << quote(c.dart_name(d));
    if (c.label(d)) out << ", taillabel=" << quote(*c.label(d));
    if (c.label(d + 1)) out << ", headlabel=" << quote(*c.label(d + 1));
    if (opts.colour_classes && c.label(d))
      out << ", color=" << quote(kPalette[colour.at(label_letter(*c.label(d))) % std::size(kPalette)]);
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cubecx::io
