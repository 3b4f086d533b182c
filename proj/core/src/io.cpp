#include "polydescent/io.hpp"

#include <fstream>
#include <sstream>

#include "polydescent/errors.hpp"

namespace polydescent {

namespace {

double number_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number()) throw InvalidInput(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

std::vector<Root> roots_from(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_array()) {
    throw InvalidInput(std::string("expected an object with an array \"") + key + "\"");
  }
  std::vector<Root> roots;
  for (const auto& item : j.at(key)) {
    Root r;
    r.location = {number_field(item, "re"), number_field(item, "im")};
    int mult = 1;
    if (item.contains("mult")) {
      const auto& m = item.at("mult");
      if (!m.is_number_integer() || m.get<long long>() < 1) throw InvalidInput("\"mult\" must be a positive integer");
      mult = m.get<int>();
    }
    r.multiplicity = mult;
    roots.push_back(r);
  }
  return roots;
}

json roots_to(std::span<const Root> roots) {
  json arr = json::array();
  for (const auto& r : roots) arr.push_back({{"re", r.location.real()}, {"im", r.location.imag()}, {"mult", r.multiplicity}});
  return arr;
}

EndpointKind endpoint_kind_from(const std::string& s) {
  if (s == "root") return EndpointKind::root;
  if (s == "critical") return EndpointKind::critical;
  if (s == "unresolved") return EndpointKind::unresolved;
  throw InvalidInput("unknown endpoint kind \"" + s + "\"");
}

}  // namespace

json to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) { return {number_field(j, "re"), number_field(j, "im")}; }

FactoredPolynomial polynomial_from_json(const json& j) { return FactoredPolynomial(roots_from(j, "roots")); }

json to_json(const FactoredPolynomial& poly) { return {{"roots", roots_to(poly.roots())}}; }

BlaschkeProduct blaschke_from_json(const json& j) { return make_blaschke(roots_from(j, "zeros")); }

json to_json(const BlaschkeProduct& b) {
  return {{"zeros", roots_to(b.zeros())}, {"constant", to_json(b.constant())}};
}

json to_json(const DescentPath& path) {
  json samples = json::array();
  for (const auto& s : path.samples) samples.push_back({{"t", s.t}, {"re", s.z.real()}, {"im", s.z.imag()}});
  return {{"anchor", to_json(path.anchor)},
          {"anchor_value", to_json(path.anchor_value)},
          {"samples", std::move(samples)},
          {"endpoint",
           {{"kind", to_string(path.endpoint.kind)},
            {"re", path.endpoint.location.real()},
            {"im", path.endpoint.location.imag()}}},
          {"arc_length", path.arc_length}};
}

DescentPath path_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("path JSON must be an object");
  DescentPath p;
  p.anchor = complex_from_json(j.value("anchor", json::object()));
  p.anchor_value = complex_from_json(j.value("anchor_value", json::object()));
  if (!j.contains("samples") || !j.at("samples").is_array()) throw InvalidInput("path JSON needs a \"samples\" array");
  for (const auto& s : j.at("samples")) {
    p.samples.push_back({number_field(s, "t"), {number_field(s, "re"), number_field(s, "im")}});
  }
  if (j.contains("endpoint")) {
    const auto& e = j.at("endpoint");
    if (!e.contains("kind") || !e.at("kind").is_string()) throw InvalidInput("endpoint needs a string \"kind\"");
    p.endpoint.kind = endpoint_kind_from(e.at("kind").get<std::string>());
    p.endpoint.location = {number_field(e, "re"), number_field(e, "im")};
  }
  p.arc_length = arc_length(p);
  return p;
}

json to_json(const DescentTree& tree) {
  json vertices = json::array();
  for (std::size_t i = 0; i < tree.vertices.size(); ++i) {
    const auto& v = tree.vertices[i];
    vertices.push_back({{"index", i},
                        {"label", v.label},
                        {"kind", to_string(v.kind)},
                        {"re", v.location.real()},
                        {"im", v.location.imag()},
                        {"mult", v.multiplicity}});
  }
  json edges = json::array();
  for (const auto& e : tree.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"branch", e.branch}, {"path", to_json(e.path)}});
  }
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}, {"scale", tree.scale}};
}

json to_json(const TreeReport& r) {
  return {{"edge_count", r.edge_count},
          {"expected_edges", r.expected_edges},
          {"vertex_count", r.vertex_count},
          {"edge_count_ok", r.edge_count_ok},
          {"connected", r.connected},
          {"acyclic", r.acyclic},
          {"components", r.components},
          {"min_interior_distance", r.min_interior_distance},
          {"disjoint", r.disjoint},
          {"distinct_branch_targets", r.distinct_branch_targets},
          {"pass", r.passed()}};
}

json to_json(const BoundReport& r) {
  return {{"arc_length", r.arc_length},
          {"crofton", r.crofton_length},
          {"pi_N_R", r.pi_N_R},
          {"two_pi_s_R", r.two_pi_s_R},
          {"endpoint_region", to_string(r.endpoint_region)},
          {"degree_bound_holds", r.degree_bound_holds},
          {"boundary_bound_applies", r.boundary_bound_applies},
          {"boundary_bound_holds", r.boundary_bound_holds},
          {"max_crossings", r.max_crossings},
          {"crossings_within_N", r.crossings_within_degree},
          {"crossings_within_2s", r.crossings_within_boundary},
          {"pass", r.passed()}};
}

json to_json(const ComponentReport& r) {
  return {{"r", r.r},
          {"resolution", r.resolution},
          {"grid_components", r.grid_components},
          {"walsh_components", r.walsh_components},
          {"root_component", r.root_component},
          {"agrees", r.agrees()}};
}

json to_json(const SeparationReport& r) {
  return {{"critical_vertex", r.critical_vertex},
          {"critical_value", r.critical_value},
          {"r", r.r},
          {"resolution", r.resolution},
          {"root_vertices", r.root_vertices},
          {"component_ids", r.component_ids},
          {"separated", r.separated},
          {"witnessed_lower_bound", r.witnessed_lower_bound}};
}

json to_json(const IntegralReport& r) {
  return {{"from", r.from},
          {"via", r.via},
          {"to", r.to},
          {"value", to_json(r.value)},
          {"magnitude", r.magnitude},
          {"origin_radius", r.origin_radius},
          {"critical_value", r.critical_value},
          {"bound", r.bound},
          {"both_boundary", r.both_boundary},
          {"sharpened_bound", r.sharpened_bound},
          {"convergence", r.convergence},
          {"pass", r.passed}};
}

json to_json(const BlaschkeReport& r) {
  json edges = json::array();
  for (const auto& e : r.edges) {
    edges.push_back({{"from", e.from},
                     {"to", e.to},
                     {"arc_length", e.arc_length},
                     {"crofton", e.crofton_length},
                     {"max_abs_z", e.max_abs_z},
                     {"max_crossings", e.max_crossings}});
  }
  return {{"s", r.s},
          {"N", r.n},
          {"p", r.p},
          {"critical_multiplicity", r.critical_multiplicity},
          {"length_bound_2piN", r.length_bound},
          {"tree", to_json(r.tree_report)},
          {"edges", std::move(edges)},
          {"multiplicity_ok", r.multiplicity_ok},
          {"inside_disk", r.inside_disk},
          {"lengths_ok", r.lengths_ok},
          {"crossings_ok", r.crossings_ok},
          {"crofton_ok", r.crofton_ok},
          {"pass", r.passed()}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("invalid JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << text;
  if (!out) throw InvalidInput("failed writing " + path.string());
}

}  // namespace polydescent
