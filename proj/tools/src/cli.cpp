#include "polydescent/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "polydescent/blaschke.hpp"
#include "polydescent/crofton.hpp"
#include "polydescent/errors.hpp"
#include "polydescent/explore.hpp"
#include "polydescent/geometry.hpp"
#include "polydescent/io.hpp"
#include "polydescent/level_set.hpp"
#include "polydescent/render.hpp"
#include "polydescent/tree.hpp"

namespace polydescent {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

double parse_double(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw InvalidInput("not a number: \"" + std::string(text) + "\"");
  }
  return v;
}

// "re,im" or a bare real number.
Complex parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_double(text), 0.0};
  return {parse_double(std::string_view(text).substr(0, comma)),
          parse_double(std::string_view(text).substr(comma + 1))};
}

Background parse_background(const std::string& name) {
  if (name == "none") return Background::none;
  if (name == "modulus") return Background::modulus;
  if (name == "phase") return Background::phase;
  throw InvalidInput("unknown background \"" + name + "\"");
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

json disk_json(const EnclosingDisk& d) { return {{"center", to_json(d.center)}, {"radius", d.radius}}; }

json hull_json(const ConvexHull& h) {
  json v = json::array();
  for (Complex z : h.vertices()) v.push_back(to_json(z));
  return {{"vertices", std::move(v)}, {"degenerate", h.degenerate()}};
}

struct TreeOutputs {
  std::string json_path, dot_path, svg_path, background = "none";
  int width = 800;
};

void add_tree_outputs(CLI::App* cmd, TreeOutputs& o) {
  cmd->add_option("--json", o.json_path, "Tree JSON output");
  cmd->add_option("--dot", o.dot_path, "Graphviz output");
  cmd->add_option("--svg", o.svg_path, "SVG output");
  cmd->add_option("--background", o.background, "SVG backdrop: none, modulus or phase");
  cmd->add_option("--width", o.width, "SVG width in pixels")->check(CLI::Range(64, 8192));
}

int write_tree(const DescentTree& tree, const AnalyticTarget& target, std::vector<Complex> hull,
               const TreeOutputs& o, std::ostream& out) {
  const Background bg = parse_background(o.background);
  if (!o.json_path.empty()) emit(to_json(tree), o.json_path, out);
  if (!o.dot_path.empty()) write_text_file(o.dot_path, tree_to_dot(tree));
  if (!o.svg_path.empty()) {
    SvgOptions svg;
    svg.width = o.width;
    svg.background = bg;
    svg.hull = std::move(hull);
    write_text_file(o.svg_path, tree_to_svg(tree, target, svg));
  }
  const auto report = verify_tree(tree);
  out << to_json(report).dump(2) << "\n";
  return report.passed() ? kOk : kCheckFailed;
}

struct Args {
  std::string poly, zeros, path, out, report, csv, summary, svg;
  std::string from;
  bool cont = false;
  bool witness = false;
  bool no_integral = false;
  int n_theta = 720;
  int n_r = 256;
  int grid = 512;
  double r = 0.0;
  int instances = 100;
  std::uint64_t seed = 42;
  std::string kind = "polynomial";
  int max_distinct = 6, max_mult = 4, max_degree = 12;
  bool no_bias = false;
  int threads = 0;
  TreeOutputs tree;
};

int cmd_trace(const Args& a, std::ostream& out) {
  const Complex beta = parse_point(a.from);
  PolynomialTarget target(polynomial_from_json(read_json_file(a.poly)));
  TraceOptions opts;
  opts.continue_through_critical = a.cont;
  const auto path = trace_descent(target, beta, opts);
  emit(to_json(path), a.out, out);
  return kOk;
}

int cmd_tree(const Args& a, std::ostream& out) {
  PolynomialTarget target(polynomial_from_json(read_json_file(a.poly)));
  const auto tree = build_descent_tree(target);
  const auto locations = target.polynomial().locations();
  const auto hull = convex_hull(locations);
  return write_tree(tree, target, {hull.vertices().begin(), hull.vertices().end()}, a.tree, out);
}

int cmd_verify(const Args& a, std::ostream& out) {
  const auto poly = polynomial_from_json(read_json_file(a.poly));
  PolynomialTarget target(poly);
  const auto locations = poly.locations();
  const auto hull = convex_hull(locations);
  const auto disk = smallest_enclosing_disk(locations);
  const auto tree = build_descent_tree(target);
  const auto tree_report = verify_tree(tree);
  bool pass = tree_report.passed();

  json edges = json::array();
  bool bounds_pass = true;
  for (const auto& e : tree.edges) {
    const auto b = verify_length_bounds(e.path, poly, hull, disk, a.n_theta, a.n_r);
    bounds_pass = bounds_pass && b.passed();
    edges.push_back({{"from", tree.vertices[e.from].label},
                     {"to", tree.vertices[e.to].label},
                     {"branch", e.branch},
                     {"bounds", to_json(b)}});
  }
  pass = pass && bounds_pass;

  json integrals = json::array();
  bool integrals_pass = true;
  if (!a.no_integral) {
    for (int c = 0; c < static_cast<int>(tree.vertices.size()); ++c) {
      if (tree.vertices[c].kind != PointKind::critical) continue;
      std::vector<int> ends;
      for (const auto& e : tree.edges) {
        if (e.from == c && tree.vertices[e.to].kind == PointKind::root) ends.push_back(e.to);
      }
      for (std::size_t i = 0; i < ends.size(); ++i) {
        for (std::size_t j = i + 1; j < ends.size(); ++j) {
          if (ends[i] == ends[j]) continue;
          const auto rep = integral_bound_check(poly, tree, ends[i], ends[j]);
          integrals_pass = integrals_pass && rep.passed;
          integrals.push_back(to_json(rep));
        }
      }
    }
    pass = pass && integrals_pass;
  }

  json separation = json::array();
  if (a.witness) {
    for (int c = 0; c < static_cast<int>(tree.vertices.size()); ++c) {
      if (tree.vertices[c].kind != PointKind::critical) continue;
      const auto rep = separation_witness(poly, tree, c);
      pass = pass && rep.separated;
      separation.push_back(to_json(rep));
    }
  }

  json report = {{"polynomial", to_json(poly)},
                 {"N", poly.degree()},
                 {"s", poly.distinct_count()},
                 {"p", target.critical().points.size()},
                 {"hull", hull_json(hull)},
                 {"disk", disk_json(disk)},
                 {"tree", to_json(tree_report)},
                 {"edges", std::move(edges)},
                 {"bounds_pass", bounds_pass},
                 {"integrals", std::move(integrals)},
                 {"separation", std::move(separation)},
                 {"pass", pass}};
  emit(report, a.report, out);
  return pass ? kOk : kCheckFailed;
}

int cmd_crofton(const Args& a, std::ostream& out) {
  const auto path = path_from_json(read_json_file(a.path));
  const auto poly = polynomial_from_json(read_json_file(a.poly));
  const auto locations = poly.locations();
  const auto b = verify_length_bounds(path, poly, convex_hull(locations), smallest_enclosing_disk(locations),
                                      a.n_theta, a.n_r);
  json j = {{"arc_length", b.arc_length},
            {"crofton", b.crofton_length},
            {"pi_N_R", b.pi_N_R},
            {"two_pi_s_R", b.two_pi_s_R},
            {"max_crossings", b.max_crossings}};
  emit(j, a.out, out);
  return kOk;
}

int cmd_levelset(const Args& a, std::ostream& out) {
  const auto poly = polynomial_from_json(read_json_file(a.poly));
  if (!(a.r > 0.0)) throw InvalidInput("--r must be positive");
  const auto rep = count_level_components(poly, a.r, a.grid);
  if (!a.svg.empty()) write_text_file(a.svg, level_set_to_svg(level_set_grid(poly, a.r, a.grid), poly));
  emit(to_json(rep), a.out, out);
  return rep.agrees() ? kOk : kCheckFailed;
}

int cmd_blaschke_tree(const Args& a, std::ostream& out) {
  BlaschkeTarget target(blaschke_from_json(read_json_file(a.zeros)));
  const auto tree = build_descent_tree(target);
  std::vector<Complex> circle;
  for (int k = 0; k < 128; ++k) circle.push_back(std::polar(1.0, two_pi * k / 128));
  return write_tree(tree, target, circle, a.tree, out);
}

int cmd_blaschke_verify(const Args& a, std::ostream& out) {
  const auto b = blaschke_from_json(read_json_file(a.zeros));
  const auto rep = blaschke_tree_and_bounds(b, a.n_theta);
  json j = to_json(rep);
  j["product"] = to_json(b);
  emit(j, a.report, out);
  return rep.passed() ? kOk : kCheckFailed;
}

int cmd_explore(const Args& a, std::ostream& out) {
  InstanceSpec spec;
  if (a.kind == "polynomial") {
    spec.kind = InstanceKind::polynomial;
  } else if (a.kind == "blaschke") {
    spec.kind = InstanceKind::blaschke;
  } else {
    throw InvalidInput("unknown --kind \"" + a.kind + "\"");
  }
  spec.seed = a.seed;
  spec.max_distinct = a.max_distinct;
  spec.max_multiplicity = a.max_mult;
  spec.max_degree = a.max_degree;
  spec.interior_bias = !a.no_bias;
  if (spec.max_degree < spec.min_distinct) throw InvalidInput("--max-degree must be at least 2");
  int threads = thread_budget();
  if (a.threads > 0) threads = std::min(threads, a.threads);
  const auto rows = explore_lengths(spec, a.instances, threads);
  const std::string csv = exploration_csv(rows);
  if (a.csv.empty() || a.csv == "-") {
    out << csv;
  } else {
    write_text_file(a.csv, csv);
  }
  const auto summary = exploration_summary(rows);
  if (!a.summary.empty()) emit(summary, a.summary, out);
  const bool ok = summary["failures"].get<int>() == 0 && summary["degree_bound_holds"].get<bool>() &&
                  summary["boundary_bound_holds"].get<bool>();
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Steepest-descent paths, descent trees and length bounds for polynomials"};
  app.name(argv.empty() ? "polydescent" : argv.front());
  app.require_subcommand(1);
  Args a;

  auto* trace = app.add_subcommand("trace", "Trace the descent path from a point");
  trace->add_option("--poly", a.poly, "Polynomial JSON")->required();
  trace->add_option("--from", a.from, "Start point as re,im")->required();
  trace->add_option("--out", a.out, "Path JSON output (default stdout)");
  trace->add_flag("--continue", a.cont, "Continue through critical points");

  auto* tree = app.add_subcommand("tree", "Build the descent tree");
  tree->add_option("--poly", a.poly, "Polynomial JSON")->required();
  add_tree_outputs(tree, a.tree);

  auto* verify = app.add_subcommand("verify", "Check tree structure and length bounds");
  verify->add_option("--poly", a.poly, "Polynomial JSON")->required();
  verify->add_option("--report", a.report, "Report JSON output (default stdout)");
  verify->add_option("--n-theta", a.n_theta, "Crofton directions")->check(CLI::Range(8, 100000));
  verify->add_option("--n-r", a.n_r, "Crossing offsets per direction")->check(CLI::Range(8, 100000));
  verify->add_flag("--witness", a.witness, "Also check level-set separation at each critical point");
  verify->add_flag("--no-integral", a.no_integral, "Skip the integral bound checks");

  auto* crofton = app.add_subcommand("crofton", "Crofton length and crossing counts of a path");
  crofton->add_option("--path", a.path, "Path JSON")->required();
  crofton->add_option("--poly", a.poly, "Polynomial JSON")->required();
  crofton->add_option("--out", a.out, "JSON output (default stdout)");
  crofton->add_option("--n-theta", a.n_theta, "Crofton directions")->check(CLI::Range(8, 100000));
  crofton->add_option("--n-r", a.n_r, "Crossing offsets per direction")->check(CLI::Range(8, 100000));

  auto* levelset = app.add_subcommand("levelset", "Count components of {|f| < r}");
  levelset->add_option("--poly", a.poly, "Polynomial JSON")->required();
  levelset->add_option("--r", a.r, "Level")->required();
  levelset->add_option("--grid", a.grid, "Grid resolution")->check(CLI::Range(64, 8192));
  levelset->add_option("--svg", a.svg, "SVG output");
  levelset->add_option("--out", a.out, "JSON output (default stdout)");

  auto* blaschke = app.add_subcommand("blaschke", "Blaschke product trees");
  blaschke->require_subcommand(1);
  auto* btree = blaschke->add_subcommand("tree", "Build the descent tree");
  btree->add_option("--zeros", a.zeros, "Blaschke JSON")->required();
  add_tree_outputs(btree, a.tree);
  auto* bverify = blaschke->add_subcommand("verify", "Check tree structure and length bounds");
  bverify->add_option("--zeros", a.zeros, "Blaschke JSON")->required();
  bverify->add_option("--report", a.report, "Report JSON output (default stdout)");
  bverify->add_option("--n-theta", a.n_theta, "Crofton directions")->check(CLI::Range(8, 100000));

  auto* explore = app.add_subcommand("explore", "Random corpus of edge-length ratios");
  explore->add_option("--instances", a.instances, "Number of instances")->check(CLI::Range(1, 10000000));
  explore->add_option("--seed", a.seed, "Master seed");
  explore->add_option("--kind", a.kind, "polynomial or blaschke");
  explore->add_option("--max-distinct", a.max_distinct, "Largest s")->check(CLI::Range(2, 64));
  explore->add_option("--max-multiplicity", a.max_mult, "Largest root multiplicity")->check(CLI::Range(1, 64));
  explore->add_option("--max-degree", a.max_degree, "Largest N")->check(CLI::Range(2, 256));
  explore->add_flag("--no-interior-bias", a.no_bias, "Draw all multiplicities uniformly");
  explore->add_option("--threads", a.threads, "Worker cap (also POLYDESCENT_THREADS)");
  explore->add_option("--csv", a.csv, "CSV output (default stdout)");
  explore->add_option("--summary", a.summary, "Summary JSON output");

  std::vector<const char*> cargv;
  for (const auto& s : argv) cargv.push_back(s.c_str());
  if (cargv.empty()) cargv.push_back("polydescent");
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    CLI::App* active = &app;
    for (auto* sub : app.get_subcommands()) active = sub;
    err << active->help();
    return kUsage;
  }

  try {
    if (*trace) return cmd_trace(a, out);
    if (*tree) return cmd_tree(a, out);
    if (*verify) return cmd_verify(a, out);
    if (*crofton) return cmd_crofton(a, out);
    if (*levelset) return cmd_levelset(a, out);
    if (*btree) return cmd_blaschke_tree(a, out);
    if (*bverify) return cmd_blaschke_verify(a, out);
    if (*explore) return cmd_explore(a, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NearCriticalValue& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  err << app.help();
  return kUsage;
}

int run_command(const std::vector<std::string>& argv) { return run_command(argv, std::cout, std::cerr); }

}  // namespace polydescent
