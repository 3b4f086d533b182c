#include "polydescent/level_set.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "polydescent/errors.hpp"

namespace polydescent {

namespace {

int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

LevelSetGrid fill_grid(const FactoredPolynomial& poly, double r, int resolution, Complex center, double half) {
  LevelSetGrid g;
  g.center = center;
  g.half_width = half;
  g.resolution = resolution;
  g.r = r;
  const int n = resolution;
  std::vector<char> inside(static_cast<std::size_t>(n) * n, 0);
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      inside[static_cast<std::size_t>(iy) * n + ix] = std::abs(evaluate(poly, g.cell_center(ix, iy))) < r;
    }
  }
  for (const auto& root : poly.roots()) {
    if (const int c = g.cell_of(root.location); c >= 0) inside[c] = 1;
  }

  std::vector<int> parent(inside.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&parent](int a, int b) {
    a = find(parent, a);
    b = find(parent, b);
    if (a != b) parent[a] = b;
  };
  for (int iy = 0; iy < n; ++iy) {
    for (int ix = 0; ix < n; ++ix) {
      const int c = iy * n + ix;
      if (!inside[c]) continue;
      if (ix + 1 < n && inside[c + 1]) unite(c, c + 1);
      if (iy + 1 < n && inside[c + n]) unite(c, c + n);
    }
  }
  g.labels.assign(inside.size(), -1);
  std::vector<int> compact(inside.size(), -1);
  int next = 0;
  for (std::size_t c = 0; c < inside.size(); ++c) {
    if (!inside[c]) continue;
    const int rep = find(parent, static_cast<int>(c));
    if (compact[rep] < 0) compact[rep] = next++;
    g.labels[c] = compact[rep];
  }
  g.components = next;
  return g;
}

double box_half_width(const FactoredPolynomial& poly, const EnclosingDisk& disk, double r) {
  // |f(z)| >= (|z - c| - R)^N outside the disk, so {|f| < r} lies within R + r^{1/N}.
  const double reach = disk.radius + std::pow(r, 1.0 / poly.degree());
  return std::max(1.2 * disk.radius, 1.02 * reach);
}

}  // namespace

Complex LevelSetGrid::cell_center(int ix, int iy) const {
  const double h = cell_size();
  return center + Complex{-half_width + (ix + 0.5) * h, -half_width + (iy + 0.5) * h};
}

int LevelSetGrid::cell_of(Complex z) const {
  const double h = cell_size();
  const Complex local = z - center + Complex{half_width, half_width};
  const int ix = static_cast<int>(std::floor(local.real() / h));
  const int iy = static_cast<int>(std::floor(local.imag() / h));
  if (ix < 0 || iy < 0 || ix >= resolution || iy >= resolution) return -1;
  return iy * resolution + ix;
}

LevelSetGrid level_set_grid(const FactoredPolynomial& poly, double r, int resolution) {
  if (!(r > 0.0)) throw std::invalid_argument("level_set_grid: r must be positive");
  if (resolution < 2) throw std::invalid_argument("level_set_grid: resolution too small");
  const auto locs = poly.locations();
  const auto disk = smallest_enclosing_disk(locs);
  return fill_grid(poly, r, resolution, disk.center, box_half_width(poly, disk, r));
}

int walsh_count(const CriticalPointSet& critical, const FactoredPolynomial& poly, double r) {
  int count = 1;
  for (const auto& c : critical.points) {
    if (std::abs(evaluate(poly, c.location)) >= r) count += c.multiplicity;
  }
  return count;
}

ComponentReport count_level_components(const FactoredPolynomial& poly, double r, int resolution) {
  if (!(r > 0.0)) throw std::invalid_argument("count_level_components: r must be positive");
  if (resolution < 64) throw std::invalid_argument("count_level_components: resolution must be >= 64");
  const auto critical = critical_points(poly);
  for (const auto& c : critical.points) {
    const double value = std::abs(evaluate(poly, c.location));
    if (std::abs(value - r) <= 0.01 * value) {
      throw NearCriticalValue("level " + std::to_string(r) + " is within 1% of critical value " + std::to_string(value));
    }
  }
  const auto grid = level_set_grid(poly, r, resolution);
  ComponentReport rep;
  rep.r = r;
  rep.resolution = resolution;
  rep.grid_components = grid.components;
  rep.walsh_components = walsh_count(critical, poly, r);
  for (const auto& root : poly.roots()) {
    const int c = grid.cell_of(root.location);
    rep.root_component.push_back(c >= 0 ? grid.labels[c] : -1);
  }
  return rep;
}

SeparationReport separation_witness(const FactoredPolynomial& poly, const DescentTree& tree, int critical_vertex) {
  if (critical_vertex < 0 || critical_vertex >= static_cast<int>(tree.vertices.size()) ||
      tree.vertices[critical_vertex].kind != PointKind::critical) {
    throw RouteError("separation_witness: not a critical vertex");
  }
  SeparationReport rep;
  rep.critical_vertex = critical_vertex;
  const Complex beta = tree.vertices[critical_vertex].location;
  rep.critical_value = std::abs(evaluate(poly, beta));
  rep.r = rep.critical_value * (1.0 - 1e-3);

  std::set<int> roots;
  for (const auto& e : tree.edges) {
    if (e.from == critical_vertex && tree.vertices[e.to].kind == PointKind::root) roots.insert(e.to);
  }
  rep.root_vertices.assign(roots.begin(), roots.end());
  if (rep.root_vertices.size() < 2) throw RouteError("separation_witness: fewer than two branch roots");

  // Other critical levels too close to r make the grid topology unreliable;
  // levels equal to |f(beta_j)| are pinches of the same kind and are resolved
  // by the adaptive cell size below.
  for (const auto& v : tree.vertices) {
    if (v.kind != PointKind::critical) continue;
    const double value = std::abs(evaluate(poly, v.location));
    if (std::abs(value - rep.critical_value) <= 1e-9 * rep.critical_value) continue;
    if (std::abs(value - rep.r) <= 0.01 * value) {
      throw NearCriticalValue("separation_witness: another critical value is within 1% of the level");
    }
  }

  const auto locs = poly.locations();
  const auto disk = smallest_enclosing_disk(locs);
  const double half = box_half_width(poly, disk, rep.r);
  // Cells must be several times finer than the neck between lobes at each pinch above r.
  double neck = std::numeric_limits<double>::infinity();
  for (const auto& v : tree.vertices) {
    if (v.kind != PointKind::critical) continue;
    const double value = std::abs(evaluate(poly, v.location));
    if (value < rep.r) continue;
    double clearance = std::numeric_limits<double>::infinity();
    for (const auto& w : tree.vertices) {
      const double d = std::abs(w.location - v.location);
      if (d > 1e-7 * tree.scale) clearance = std::min(clearance, d);
    }
    const auto model = extract_branch_model([&poly](Complex z) { return evaluate(poly, z); }, v.location,
                                            v.multiplicity, clearance);
    neck = std::min(neck, 2.0 * std::pow((value - rep.r) / std::abs(model.leading_coefficient), 1.0 / model.order));
  }
  const int needed = static_cast<int>(std::ceil(2.0 * half / (neck / 6.0)));
  rep.resolution = std::clamp(needed, 512, 4096);

  const auto grid = fill_grid(poly, rep.r, rep.resolution, disk.center, half);
  std::set<int> ids;
  for (const int v : rep.root_vertices) {
    const int c = grid.cell_of(tree.vertices[v].location);
    const int id = c >= 0 ? grid.labels[c] : -1;
    rep.component_ids.push_back(id);
    ids.insert(id);
  }
  rep.separated = ids.size() == rep.root_vertices.size() && !ids.contains(-1);
  rep.witnessed_lower_bound = rep.separated ? rep.r : 0.0;
  return rep;
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussLegendre gl;
  gl.nodes.resize(n);
  gl.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    gl.nodes[i] = -x;
    gl.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    gl.weights[i] = w;
    gl.weights[n - 1 - i] = w;
  }
  return gl;
}

Complex route_integral(const FactoredPolynomial& poly, std::span<const Complex> polyline, int nodes) {
  const auto gl = gauss_legendre(nodes);
  Complex total{};
  for (std::size_t i = 1; i < polyline.size(); ++i) {
    const Complex a = polyline[i - 1], b = polyline[i];
    const Complex half = 0.5 * (b - a), mid = 0.5 * (a + b);
    Complex seg{};
    for (int k = 0; k < nodes; ++k) {
      const Complex z = mid + gl.nodes[k] * half;
      seg += gl.weights[k] * evaluate(poly, z) * std::exp(-z);
    }
    total += seg * half;
  }
  return total;
}

IntegralReport integral_bound_check(const FactoredPolynomial& poly, const DescentTree& tree, int root_from,
                                    int root_to, int nodes) {
  const int nv = static_cast<int>(tree.vertices.size());
  if (root_from < 0 || root_to < 0 || root_from >= nv || root_to >= nv ||
      tree.vertices[root_from].kind != PointKind::root || tree.vertices[root_to].kind != PointKind::root) {
    throw RouteError("integral_bound_check: end points must be root vertices");
  }
  const auto route = tree_route(tree, root_from, root_to);
  if (route.vertex_path.size() != 3 || tree.vertices[route.vertex_path[1]].kind != PointKind::critical) {
    throw RouteError("integral_bound_check: no two-edge route through a single critical point");
  }
  IntegralReport rep;
  rep.from = root_from;
  rep.via = route.vertex_path[1];
  rep.to = root_to;
  rep.value = route_integral(poly, route.points, nodes);
  rep.magnitude = std::abs(rep.value);
  const Complex fine = route_integral(poly, route.points, 2 * nodes);
  rep.convergence = rep.magnitude > 0.0 ? std::abs(fine - rep.value) / rep.magnitude : std::abs(fine - rep.value);

  for (const auto& r : poly.roots()) rep.origin_radius = std::max(rep.origin_radius, std::abs(r.location));
  rep.critical_value = std::abs(evaluate(poly, tree.vertices[rep.via].location));
  const double common = rep.origin_radius * std::exp(rep.origin_radius) * rep.critical_value;
  rep.bound = two_pi * poly.degree() * common;
  const auto locs = poly.locations();
  const auto hull = convex_hull(locs);
  rep.both_boundary = hull_membership(hull, tree.vertices[root_from].location) == HullRegion::boundary &&
                      hull_membership(hull, tree.vertices[root_to].location) == HullRegion::boundary;
  rep.sharpened_bound = 2.0 * two_pi * static_cast<double>(poly.distinct_count()) * common;
  rep.route_length = route.length;
  rep.route_peak = route.peak_modulus;
  rep.passed = rep.magnitude <= rep.bound && (!rep.both_boundary || rep.magnitude <= rep.sharpened_bound);
  return rep;
}

}  // namespace polydescent
