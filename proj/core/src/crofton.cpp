#include "polydescent/crofton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polydescent {

namespace {

constexpr double kBoundSlack = 1.0 + 1e-3;

}  // namespace

std::vector<Complex> polyline_of(const DescentPath& path) {
  std::vector<Complex> out;
  out.reserve(path.samples.size());
  for (const auto& s : path.samples) out.push_back(s.z);
  return out;
}

CroftonEstimate crofton_length(std::span<const Complex> polyline, int n_theta) {
  if (n_theta < 4) throw std::invalid_argument("crofton_length: n_theta must be >= 4");
  CroftonEstimate est;
  est.theta_samples = n_theta;
  est.variation.assign(n_theta, 0.0);
  const double dtheta = two_pi / n_theta;
  for (int k = 0; k < n_theta; ++k) {
    const Complex rot = std::polar(1.0, -dtheta * k);
    double v = 0.0;
    for (std::size_t i = 1; i < polyline.size(); ++i) v += std::abs(((polyline[i] - polyline[i - 1]) * rot).real());
    est.variation[k] = v;
  }
  double sum = 0.0;
  for (const double v : est.variation) sum += dtheta * v;
  est.length = 0.25 * sum;
  return est;
}

CroftonEstimate crofton_length(const DescentPath& path, int n_theta) {
  return crofton_length(polyline_of(path), n_theta);
}

CrossingProfile max_crossings(std::span<const Complex> polyline, int n_theta, int n_r) {
  if (n_theta < 1 || n_r < 1) throw std::invalid_argument("max_crossings: grids must be nonempty");
  CrossingProfile prof;
  const double dtheta = two_pi / n_theta;
  std::vector<double> proj(polyline.size());
  for (int k = 0; k < n_theta; ++k) {
    double theta = dtheta * k;
    // Nudge off directions in which some segment is parallel to the lines.
    for (int attempt = 0; attempt < 8; ++attempt) {
      bool tangent = false;
      const Complex rot = std::polar(1.0, -theta);
      for (std::size_t i = 1; i < polyline.size() && !tangent; ++i) {
        const Complex d = polyline[i] - polyline[i - 1];
        const double len = std::abs(d);
        tangent = len > 0.0 && std::abs((d * rot).real()) < 1e-9 * len;
      }
      if (!tangent) break;
      theta += 0.5 * dtheta / (1 << attempt);
    }
    const Complex rot = std::polar(1.0, -theta);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < polyline.size(); ++i) {
      proj[i] = (polyline[i] * rot).real();
      lo = std::min(lo, proj[i]);
      hi = std::max(hi, proj[i]);
    }
    const double margin = 0.05 * std::max(hi - lo, 1e-12);
    lo -= margin;
    hi += margin;
    const double dr = (hi - lo) / n_r;
    std::vector<double> rs(n_r);
    for (int j = 0; j < n_r; ++j) rs[j] = lo + (j + 0.5) * dr;

    // Segment i crosses line r iff r lies in (min, max] of its endpoint projections.
    std::vector<int> diff(n_r + 1, 0);
    for (std::size_t i = 1; i < polyline.size(); ++i) {
      const double a = std::min(proj[i - 1], proj[i]), b = std::max(proj[i - 1], proj[i]);
      if (a == b) continue;
      // first j with rs[j] > a, last j with rs[j] <= b
      const int j0 = std::max(0, static_cast<int>(std::floor((a - lo) / dr - 0.5)) + 1);
      int j1 = std::min(n_r - 1, static_cast<int>(std::floor((b - lo) / dr - 0.5)));
      int jstart = j0;
      while (jstart > 0 && rs[jstart - 1] > a) --jstart;
      while (jstart < n_r && rs[jstart] <= a) ++jstart;
      while (j1 + 1 < n_r && rs[j1 + 1] <= b) ++j1;
      while (j1 >= 0 && rs[j1] > b) --j1;
      if (jstart > j1) continue;
      diff[jstart] += 1;
      diff[j1 + 1] -= 1;
    }
    std::vector<int> counts(n_r);
    int running = 0;
    for (int j = 0; j < n_r; ++j) {
      running += diff[j];
      counts[j] = running;
      prof.max_count = std::max(prof.max_count, running);
    }
    prof.theta.push_back(theta);
    prof.r.push_back(std::move(rs));
    prof.counts.push_back(std::move(counts));
  }
  return prof;
}

CrossingProfile max_crossings(const DescentPath& path, int n_theta, int n_r) {
  return max_crossings(polyline_of(path), n_theta, n_r);
}

bool BoundReport::passed() const {
  return degree_bound_holds && crossings_within_degree && (!boundary_bound_applies || (boundary_bound_holds && crossings_within_boundary));
}

BoundReport verify_length_bounds(const DescentPath& path, const FactoredPolynomial& poly, const ConvexHull& hull,
                                 const EnclosingDisk& disk, int n_theta, int n_r) {
  BoundReport rep;
  const int n = poly.degree();
  const int s = static_cast<int>(poly.distinct_count());
  rep.arc_length = arc_length(path);
  rep.crofton_length = crofton_length(path, n_theta).length;
  rep.pi_N_R = pi * n * disk.radius;
  rep.two_pi_s_R = two_pi * s * disk.radius;
  rep.endpoint_is_root = path.endpoint.kind == EndpointKind::root;
  rep.endpoint_region = hull_membership(hull, path.endpoint.location);
  rep.degree_bound_holds = rep.arc_length <= rep.pi_N_R * kBoundSlack;
  rep.boundary_bound_applies = rep.endpoint_is_root && rep.endpoint_region == HullRegion::boundary;
  rep.boundary_bound_holds = rep.arc_length <= rep.two_pi_s_R * kBoundSlack;
  rep.max_crossings = max_crossings(path, std::max(4, n_theta / 4), n_r).max_count;
  rep.crossing_limit_degree = n;
  rep.crossing_limit_boundary = 2 * s;
  rep.crossings_within_degree = rep.max_crossings <= n;
  rep.crossings_within_boundary = rep.max_crossings <= 2 * s;
  return rep;
}

}  // namespace polydescent
