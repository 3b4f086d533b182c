#include "polydescent/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "polydescent/random.hpp"

namespace polydescent {

namespace {

double cross(Complex o, Complex a, Complex b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

bool lex_less(Complex a, Complex b) {
  return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
}

EnclosingDisk disk_from(Complex a, Complex b) {
  const Complex c = 0.5 * (a + b);
  return {c, std::max(std::abs(a - c), std::abs(b - c))};
}

EnclosingDisk disk_from(Complex a, Complex b, Complex c) {
  const double bx = b.real() - a.real(), by = b.imag() - a.imag();
  const double cx = c.real() - a.real(), cy = c.imag() - a.imag();
  const double d = 2.0 * (bx * cy - by * cx);
  const double scale = std::max({std::norm(b - a), std::norm(c - a), std::norm(c - b)});
  if (std::abs(d) <= 1e-14 * scale) {
    // Collinear: the farthest pair spans the disk.
    EnclosingDisk best = disk_from(a, b);
    for (const auto& cand : {disk_from(a, c), disk_from(b, c)}) {
      if (cand.radius > best.radius) best = cand;
    }
    return best;
  }
  const double b2 = bx * bx + by * by, c2 = cx * cx + cy * cy;
  const Complex center = a + Complex{(cy * b2 - by * c2) / d, (bx * c2 - cx * b2) / d};
  return {center, std::max({std::abs(a - center), std::abs(b - center), std::abs(c - center)})};
}

}  // namespace

const char* to_string(HullRegion region) {
  switch (region) {
    case HullRegion::interior: return "interior";
    case HullRegion::boundary: return "boundary";
    case HullRegion::exterior: return "exterior";
  }
  return "unknown";
}

ConvexHull::ConvexHull(std::vector<Complex> vertices, double scale)
    : vertices_(std::move(vertices)), scale_(scale > 0.0 ? scale : 1.0) {}

HullShape ConvexHull::shape() const {
  if (vertices_.size() <= 1) return HullShape::point;
  if (vertices_.size() == 2) return HullShape::segment;
  return HullShape::polygon;
}

bool EnclosingDisk::contains(Complex z, double rel_tol) const {
  return std::abs(z - center) <= radius * (1.0 + rel_tol) + 1e-300;
}

EnclosingDisk smallest_enclosing_disk(std::span<const Complex> points) {
  if (points.empty()) throw std::invalid_argument("smallest_enclosing_disk: empty input");
  std::vector<Complex> p(points.begin(), points.end());
  CounterRng rng(0x5eedd15cULL);
  for (std::size_t i = p.size(); i > 1; --i) {
    std::swap(p[i - 1], p[rng.next() % i]);
  }
  // Containment slack is relative to the data extent so that duplicates and
  // cocircular points do not trigger needless rebuilds.
  double extent = 0.0;
  for (const auto& z : p) extent = std::max(extent, std::abs(z - p[0]));
  const double slack = 1e-14 * extent;
  auto inside = [slack](const EnclosingDisk& d, Complex z) { return std::abs(z - d.center) <= d.radius + slack; };

  EnclosingDisk disk{p[0], 0.0};
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (inside(disk, p[i])) continue;
    disk = {p[i], 0.0};
    for (std::size_t j = 0; j < i; ++j) {
      if (inside(disk, p[j])) continue;
      disk = disk_from(p[i], p[j]);
      for (std::size_t k = 0; k < j; ++k) {
        if (!inside(disk, p[k])) disk = disk_from(p[i], p[j], p[k]);
      }
    }
  }
  return disk;
}

ConvexHull convex_hull(std::span<const Complex> points) {
  if (points.empty()) throw std::invalid_argument("convex_hull: empty input");
  const double scale = smallest_enclosing_disk(points).radius;
  const double eps = 1e-12 * std::max(scale, std::numeric_limits<double>::min()) * scale;

  std::vector<Complex> p(points.begin(), points.end());
  std::sort(p.begin(), p.end(), lex_less);
  p.erase(std::unique(p.begin(), p.end(),
                      [scale](Complex a, Complex b) { return std::abs(a - b) <= 1e-14 * scale; }),
          p.end());
  if (p.size() == 1) return ConvexHull({p[0]}, scale);

  std::vector<Complex> hull(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= eps) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], p[i]) <= eps) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return ConvexHull(std::move(hull), scale);
}

double distance_to_segment(Complex z, Complex a, Complex b) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  const double s = std::clamp(((z - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(z - (a + s * ab));
}

double distance_to_hull_boundary(const ConvexHull& hull, Complex z) {
  const auto v = hull.vertices();
  if (v.size() == 1) return std::abs(z - v[0]);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    best = std::min(best, distance_to_segment(z, v[i], v[(i + 1) % v.size()]));
  }
  return best;
}

HullRegion hull_membership(const ConvexHull& hull, Complex z) {
  return hull_membership(hull, z, 1e-9 * hull.scale());
}

HullRegion hull_membership(const ConvexHull& hull, Complex z, double band) {
  const auto v = hull.vertices();
  if (hull.degenerate()) {
    return distance_to_hull_boundary(hull, z) <= band ? HullRegion::boundary : HullRegion::exterior;
  }
  // Signed distance to each CCW edge; positive means left of the edge.
  double min_signed = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Complex a = v[i], b = v[(i + 1) % v.size()];
    const double signed_dist = cross(a, b, z) / std::abs(b - a);
    min_signed = std::min(min_signed, signed_dist);
  }
  if (min_signed > band) return HullRegion::interior;
  if (min_signed >= -band) {
    // Near an edge line; it may still be far outside beyond a vertex.
    return distance_to_hull_boundary(hull, z) <= band || min_signed >= 0.0 ? HullRegion::boundary
                                                                            : HullRegion::exterior;
  }
  return HullRegion::exterior;
}

}  // namespace polydescent
