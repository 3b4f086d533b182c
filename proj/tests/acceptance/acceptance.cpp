// Acceptance checks AC1-AC11. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "polydescent/blaschke.hpp"
#include "polydescent/crofton.hpp"
#include "polydescent/explore.hpp"
#include "polydescent/geometry.hpp"
#include "polydescent/level_set.hpp"
#include "polydescent/random.hpp"
#include "polydescent/target.hpp"
#include "polydescent/tree.hpp"

using namespace polydescent;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(const char* id, const Outcome& o, double elapsed) {
  std::printf("%s %s (%.2fs) %s\n", id, o.pass ? "PASS" : "FAIL", elapsed, o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Corpus shared by AC2-AC7 and AC9: 200 instances, s <= 6, N <= 12, seed 42.
struct CorpusPath {
  int instance = 0;
  DescentPath path;
  bool from_critical = false;
};

struct CorpusInstance {
  FactoredPolynomial poly;
  std::vector<Complex> roots;
  double R = 0.0;  // enclosing radius by exhaustive search
  DescentTree tree;
  std::string error;
};

struct Corpus {
  std::vector<CorpusInstance> instances;
  std::vector<CorpusPath> paths;
  double build_seconds = 0.0;
};

Corpus build_corpus() {
  const auto start = Clock::now();
  Corpus c;
  InstanceSpec spec;
  spec.seed = 42;
  spec.max_distinct = 6;
  spec.max_degree = 12;
  CounterRng anchor_rng(4242);
  for (int i = 0; i < 200; ++i) {
    auto poly = generate_polynomial(spec, i);
    CorpusInstance inst{poly, poly.locations(), 0.0, {}, {}};
    inst.R = oracle::enclosing_radius(inst.roots);
    const PolynomialTarget target(poly);
    try {
      inst.tree = build_descent_tree(target);
      for (const auto& e : inst.tree.edges) c.paths.push_back({i, e.path, true});
      // one extra path from a random convex combination of the roots
      std::vector<double> w(inst.roots.size());
      double total = 0;
      for (auto& x : w) total += (x = anchor_rng.uniform());
      Complex beta{};
      for (std::size_t k = 0; k < w.size(); ++k) beta += w[k] / total * inst.roots[k];
      c.paths.push_back({i, trace_descent(target, beta), false});
    } catch (const std::exception& e) {
      inst.error = e.what();
    }
    c.instances.push_back(std::move(inst));
  }
  c.build_seconds = seconds_since(start);
  return c;
}

Outcome corpus_errors(const Corpus& c) {
  Outcome o;
  for (std::size_t i = 0; i < c.instances.size(); ++i) {
    if (!c.instances[i].error.empty()) {
      o.pass = false;
      o.detail += "instance " + std::to_string(i) + ": " + c.instances[i].error + "; ";
    }
  }
  return o;
}

Outcome ac1() {
  Outcome o;
  double worst_len = 0, worst_line = 0;
  {
    const Complex w = std::polar(1.0, two_pi / 3);
    const PolynomialTarget t(FactoredPolynomial({{{1, 0}, 1}, {w, 1}, {std::conj(w), 1}}));
    const auto paths = trace_all_branches(t, t.special_points()[3]);
    if (paths.size() != 3) return {false, "cubic: expected 3 branches"};
    for (const auto& p : paths) {
      worst_len = std::max(worst_len, std::abs(oracle::polyline_length(polyline_of(p)) - 1.0));
      const Complex d = p.endpoint.location / std::abs(p.endpoint.location);
      for (const auto& s : p.samples) worst_line = std::max(worst_line, std::abs((s.z * std::conj(d)).imag()));
    }
  }
  double worst_dz = 0;
  {
    const PolynomialTarget t(FactoredPolynomial({{{0, 0}, 2}, {{1, 0}, 1}}));
    const double beta = oracle::bisect([](double x) { return 3 * x * x - 2 * x; }, 0.1, 1.0);
    const auto paths = trace_all_branches(t, t.special_points()[2]);
    if (paths.size() != 2) return {false, "z^2(z-1): expected 2 branches"};
    for (const auto& p : paths) {
      const bool to_zero = std::abs(p.endpoint.location) < 0.5;
      const double want = to_zero ? beta : 1 - beta;
      worst_dz = std::max(worst_dz, std::abs(oracle::polyline_length(polyline_of(p)) - want));
      worst_line = std::max(worst_line, std::abs(p.samples[p.samples.size() / 2].z.imag()));
    }
  }
  o.pass = worst_len <= 1e-6 && worst_line <= 1e-6 && worst_dz <= 1e-6;
  o.detail = fmt("cubic |len-1| max %.2e, z^2(z-1) |len-oracle| max %.2e, line deviation %.2e", worst_len, worst_dz,
                 worst_line);
  return o;
}

Outcome ac2(const Corpus& c) {
  Outcome o = corpus_errors(c);
  double worst_res = 0;
  int non_monotone = 0;
  std::size_t samples = 0;
  for (const auto& cp : c.paths) {
    const auto& poly = c.instances[cp.instance].poly;
    const Complex fb = cp.path.anchor_value;
    double last = std::numeric_limits<double>::infinity();
    for (const auto& s : cp.path.samples) {
      const Complex fz = evaluate(poly, s.z);
      worst_res = std::max(worst_res, std::abs(fz - s.t * fb) / std::abs(fb));
      const double m = std::abs(fz);
      if (!(m < last)) ++non_monotone;
      last = m;
      ++samples;
    }
  }
  o.pass = o.pass && worst_res <= 1e-9 && non_monotone == 0;
  o.detail += fmt("%.0f paths, %.0f samples, max relative residual %.2e", double(c.paths.size()), double(samples),
                  worst_res) +
              ", non-monotone steps " + std::to_string(non_monotone);
  return o;
}

Outcome ac3(const Corpus& c) {
  Outcome o = corpus_errors(c);
  double worst_out = 0, worst_ratio = 0;
  for (const auto& cp : c.paths) {
    const auto& inst = c.instances[cp.instance];
    if (oracle::distance_to_hull(inst.roots, cp.path.anchor) > 1e-9 * inst.R) continue;
    for (const auto& s : cp.path.samples) {
      worst_out = std::max(worst_out, oracle::distance_to_hull(inst.roots, s.z) / inst.R);
    }
    const double len = oracle::polyline_length(polyline_of(cp.path));
    worst_ratio = std::max(worst_ratio, len / (pi * inst.poly.degree() * inst.R));
  }
  o.pass = o.pass && worst_out <= 1e-6 && worst_ratio <= 1 + 1e-3;
  o.detail += fmt("max hull excursion %.2e R, max length/(pi N R) %.4f", worst_out, worst_ratio);
  return o;
}

Outcome ac4(const Corpus& c) {
  Outcome o = corpus_errors(c);
  double worst_ratio = 0, worst_cross = 0;
  int boundary_paths = 0;
  for (const auto& cp : c.paths) {
    const auto& inst = c.instances[cp.instance];
    if (cp.path.endpoint.kind != EndpointKind::root) continue;
    if (!oracle::on_hull_boundary(inst.roots, cp.path.endpoint.location, 1e-9 * inst.R)) continue;
    ++boundary_paths;
    const int s = static_cast<int>(inst.roots.size());
    const double len = oracle::polyline_length(polyline_of(cp.path));
    worst_ratio = std::max(worst_ratio, len / (two_pi * s * inst.R));
    const auto prof = max_crossings(cp.path, 360, 256);
    worst_cross = std::max(worst_cross, static_cast<double>(prof.max_count) / (2 * s));
  }
  o.pass = o.pass && worst_ratio <= 1 + 1e-3 && worst_cross <= 1.0 && boundary_paths > 0;
  o.detail += fmt("%.0f boundary-ending paths, max length/(2 pi s R) %.4f, max N(r,theta)/(2s) %.3f",
                  double(boundary_paths), worst_ratio, worst_cross);
  return o;
}

Outcome ac5(const Corpus& c) {
  Outcome o = corpus_errors(c);
  int bad = 0;
  for (const auto& inst : c.instances) {
    if (!inst.error.empty()) continue;
    const auto& t = inst.tree;
    const int nv = static_cast<int>(t.vertices.size());
    int p = 0;
    for (const auto& v : t.vertices) p += v.kind == PointKind::critical;
    const int s = static_cast<int>(inst.roots.size());
    // independent connectivity check by depth-first search
    std::vector<std::vector<int>> adj(nv);
    for (const auto& e : t.edges) {
      adj[e.from].push_back(e.to);
      adj[e.to].push_back(e.from);
    }
    std::vector<char> seen(nv, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    const bool edges_ok = static_cast<int>(t.edges.size()) == s + p - 1 && nv == s + p;
    // connected with |V| - 1 edges means acyclic
    if (!(edges_ok && reached == nv && verify_tree(t).passed())) ++bad;
  }
  o.pass = o.pass && bad == 0;
  o.detail += std::to_string(c.instances.size()) + " trees, " + std::to_string(bad) + " failing";
  return o;
}

Outcome ac6(const Corpus& c) {
  Outcome o = corpus_errors(c);
  double worst_spacing = 0, worst_tangent = 0;
  int bad_counts = 0;
  for (const auto& inst : c.instances) {
    if (!inst.error.empty()) continue;
    const PolynomialTarget target(inst.poly);
    for (const auto& sp : target.special_points()) {
      if (sp.kind != PointKind::critical) continue;
      const auto seeds = descent_directions(target, sp);
      if (static_cast<int>(seeds.size()) != sp.multiplicity + 1) ++bad_counts;
      const double step = two_pi / (sp.multiplicity + 1);
      for (std::size_t k = 0; k < seeds.size(); ++k) {
        const Complex next = seeds[(k + 1) % seeds.size()].direction;
        const double gap = wrap_angle(std::arg(next / seeds[k].direction));
        worst_spacing = std::max(worst_spacing, std::abs(gap - step));
      }
      // edges of this vertex carry the branches in seed order
      for (const auto& e : inst.tree.edges) {
        if (std::abs(inst.tree.vertices[e.from].location - sp.location) > 1e-12) continue;
        const double want = std::arg(seeds[e.branch].direction);
        const double got = initial_tangent(e.path);
        worst_tangent = std::max(worst_tangent, std::abs(std::remainder(got - want, two_pi)));
      }
    }
  }
  o.pass = o.pass && bad_counts == 0 && worst_spacing <= 1e-12 && worst_tangent <= 1e-3;
  o.detail += fmt("max spacing error %.2e rad, max tangent error %.2e rad", worst_spacing, worst_tangent) +
              ", wrong branch counts " + std::to_string(bad_counts);
  return o;
}

Outcome ac7(const Corpus& c) {
  Outcome o = corpus_errors(c);
  double worst = 0;
  for (const auto& cp : c.paths) {
    const double len = oracle::polyline_length(polyline_of(cp.path));
    if (len == 0) continue;
    worst = std::max(worst, std::abs(crofton_length(cp.path, 720).length - len) / len);
  }
  o.pass = o.pass && worst <= 5e-3;
  o.detail += fmt("max relative Crofton deviation %.2e over %.0f paths", worst, double(c.paths.size()));
  return o;
}

Outcome ac8(const Corpus& c) {
  Outcome o;
  int checked = 0, skipped = 0, mismatched = 0;
  for (int i = 0; i < 50; ++i) {
    const auto& poly = c.instances[i].poly;
    const auto crit = critical_points(poly);
    std::vector<std::pair<double, int>> values;
    for (const auto& cp : crit.points) values.push_back({std::abs(evaluate(poly, cp.location)), cp.multiplicity});
    std::sort(values.begin(), values.end());
    auto walsh = [&](double r) {
      int n = 1;
      for (const auto& [v, m] : values)
        if (v >= r) n += m;
      return n;
    };
    std::vector<double> levels{values.front().first / 4, values.back().first * 4};
    for (std::size_t k = 0; k + 1 < values.size(); ++k) levels.push_back(std::sqrt(values[k].first * values[k + 1].first));
    for (double r : levels) {
      bool near = false;
      for (const auto& [v, m] : values) near = near || std::abs(r - v) <= 1e-2 * v;
      if (near) {
        ++skipped;
        continue;
      }
      ++checked;
      const auto rep = count_level_components(poly, r, 512);
      if (rep.grid_components != walsh(r)) {
        ++mismatched;
        o.detail += "instance " + std::to_string(i) + fmt(" r=%.4g grid %.0f walsh %.0f; ", r,
                                                          rep.grid_components, walsh(r));
      }
    }
  }
  o.pass = mismatched == 0 && checked > 0;
  o.detail += std::to_string(checked) + " levels checked, " + std::to_string(skipped) +
              " skipped within 1% of a critical value, " + std::to_string(mismatched) + " mismatches";
  return o;
}

Outcome ac9(const Corpus& c) {
  Outcome o = corpus_errors(c);
  int routes = 0, over = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  for (const auto& inst : c.instances) {
    if (!inst.error.empty()) continue;
    const auto& t = inst.tree;
    for (int v = 0; v < static_cast<int>(t.vertices.size()); ++v) {
      if (t.vertices[v].kind != PointKind::critical) continue;
      std::vector<int> ends;
      for (const auto& e : t.edges)
        if (e.from == v && t.vertices[e.to].kind == PointKind::root) ends.push_back(e.to);
      for (std::size_t a = 0; a < ends.size(); ++a)
        for (std::size_t b = a + 1; b < ends.size(); ++b) {
          const auto rep = integral_bound_check(inst.poly, t, ends[a], ends[b]);
          // bound recomputed here: R = max |root|
          double r0 = 0;
          for (Complex z : inst.roots) r0 = std::max(r0, std::abs(z));
          const double bound = two_pi * inst.poly.degree() * r0 * std::exp(r0) * std::abs(evaluate(inst.poly, t.vertices[v].location));
          ++routes;
          if (!(rep.magnitude <= bound)) ++over;
          worst_margin = std::min(worst_margin, bound / rep.magnitude);
        }
    }
  }
  // (z - 1)(z + 1) along -1 -> 0 -> 1 against the antiderivative -(z + 1)^2 e^{-z}
  const FactoredPolynomial quad({{{1, 0}, 1}, {{-1, 0}, 1}});
  const auto tree = build_descent_tree(PolynomialTarget(quad));
  const auto rep = integral_bound_check(quad, tree, tree.vertex_at(-1.0, 1e-9), tree.vertex_at(1.0, 1e-9));
  auto F = [](Complex z) { return -(z + 1.0) * (z + 1.0) * std::exp(-z); };
  const double exact = std::abs(F(1.0) - F(-1.0));
  const double err = std::abs(rep.magnitude - exact);
  o.pass = o.pass && over == 0 && routes > 0 && err <= 1e-9;
  o.detail += std::to_string(routes) + " two-edge routes, " + std::to_string(over) + " over the bound" +
              fmt(", min bound/|I| %.3g; quadratic |I| = %.10f (4/e error %.1e)", worst_margin, rep.magnitude, err);
  return o;
}

Outcome ac10() {
  Outcome o;
  InstanceSpec spec;
  spec.kind = InstanceKind::blaschke;
  spec.seed = 42;
  int bad_mult = 0, bad_edges = 0, outside = 0, too_long = 0, errors = 0;
  double worst_ratio = 0;
  for (int i = 0; i < 100; ++i) {
    try {
      const auto b = generate_blaschke(spec, i);
      const auto crit = blaschke_critical_points(b);
      const int s = static_cast<int>(b.distinct_count());
      if (crit.total_multiplicity() != s - 1) ++bad_mult;
      const auto tree = build_descent_tree(BlaschkeTarget(b));
      int p = 0;
      for (const auto& v : tree.vertices) p += v.kind == PointKind::critical;
      if (static_cast<int>(tree.edges.size()) != p + s - 1) ++bad_edges;
      for (const auto& e : tree.edges) {
        for (const auto& smp : e.path.samples)
          if (!(std::abs(smp.z) < 1.0)) ++outside;
        const double len = oracle::polyline_length(polyline_of(e.path));
        worst_ratio = std::max(worst_ratio, len / (two_pi * b.degree()));
        if (len > two_pi * b.degree() * (1 + 1e-3)) ++too_long;
      }
    } catch (const std::exception& e) {
      ++errors;
      o.detail += "instance " + std::to_string(i) + ": " + e.what() + "; ";
    }
  }
  const auto two = make_blaschke({{{0, 0}, 1}, {{0.5, 0}, 1}});
  const auto crit = blaschke_critical_points(two);
  const double want = 2 - std::sqrt(3.0);
  const double err = crit.points.size() == 1 ? std::abs(crit.points[0].location - Complex(want, 0)) : 1.0;
  o.pass = bad_mult == 0 && bad_edges == 0 && outside == 0 && too_long == 0 && errors == 0 && err <= 1e-10;
  o.detail += "bad multiplicity sums " + std::to_string(bad_mult) + ", bad edge counts " + std::to_string(bad_edges) +
              ", samples outside disk " + std::to_string(outside) + fmt(", max length/(2 pi N) %.4f", worst_ratio) +
              fmt(", 2-sqrt(3) error %.1e", err);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome ac11() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "polydescent_acceptance";
  std::filesystem::create_directories(dir);
  const auto a = dir / "a.csv", b = dir / "b.csv";
#ifdef POLYDESCENT_TOOL
  for (const auto& out : {a, b}) {
    const std::string cmd = std::string("\"") + POLYDESCENT_TOOL + "\" explore --instances 100 --seed 7 --csv \"" +
                            out.string() + "\"";
    const int rc = std::system(cmd.c_str());
    if (rc != 0) return {false, "explore exited with status " + std::to_string(rc)};
  }
  o.detail = "CLI runs: ";
#else
  InstanceSpec spec;
  spec.seed = 7;
  std::ofstream(a, std::ios::binary) << exploration_csv(explore_lengths(spec, 100));
  std::ofstream(b, std::ios::binary) << exploration_csv(explore_lengths(spec, 100));
  o.detail = "in-process runs: ";
#endif
  const auto x = slurp(a), y = slurp(b);
  o.pass = !x.empty() && x == y;
  o.detail += std::to_string(x.size()) + " bytes, " + (x == y ? "identical" : "different");
  std::filesystem::remove_all(dir);
  return o;
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  auto a1 = ac1();
  const double t1 = seconds_since(t0);
  if (t1 >= 1.0) a1.pass = false;
  report("AC1", a1, t1);

  const Corpus corpus = build_corpus();
  t0 = Clock::now();
  auto a2 = ac2(corpus);
  const double t2 = corpus.build_seconds + seconds_since(t0);
  if (t2 >= 60.0) a2.pass = false;
  report("AC2", a2, t2);

  const std::vector<std::pair<const char*, std::function<Outcome()>>> rest{
      {"AC3", [&] { return ac3(corpus); }},
      {"AC4", [&] { return ac4(corpus); }},
      {"AC5", [&] { return ac5(corpus); }},
      {"AC6", [&] { return ac6(corpus); }},
      {"AC7", [&] { return ac7(corpus); }},
  };
  for (const auto& [id, fn] : rest) {
    t0 = Clock::now();
    const auto out = fn();
    report(id, out, seconds_since(t0));
  }

  t0 = Clock::now();
  auto a8 = ac8(corpus);
  const double t8 = seconds_since(t0);
  if (t8 >= 120.0) a8.pass = false;
  report("AC8", a8, t8);

  for (const auto& [id, fn] : std::vector<std::pair<const char*, std::function<Outcome()>>>{
           {"AC9", [&] { return ac9(corpus); }}, {"AC10", ac10}, {"AC11", ac11}}) {
    t0 = Clock::now();
    const auto out = fn();
    report(id, out, seconds_since(t0));
  }

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
