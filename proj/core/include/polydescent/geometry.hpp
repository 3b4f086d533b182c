#pragma once

#include <span>
#include <vector>

#include "polydescent/types.hpp"

namespace polydescent {

enum class HullShape { point, segment, polygon };

enum class HullRegion { interior, boundary, exterior };

const char* to_string(HullRegion region);

/// Convex hull of a finite point set. Vertices are counterclockwise and in
/// strictly convex position; collinear input collapses to a segment.
class ConvexHull {
 public:
  ConvexHull() = default;
  ConvexHull(std::vector<Complex> vertices, double scale);

  std::span<const Complex> vertices() const { return vertices_; }
  HullShape shape() const;
  bool degenerate() const { return shape() != HullShape::polygon; }

  /// Length scale used for tolerance bands (radius of the smallest enclosing
  /// disk of the input, 1.0 if that radius is zero).
  double scale() const { return scale_; }

 private:
  std::vector<Complex> vertices_;
  double scale_ = 1.0;
};

struct EnclosingDisk {
  Complex center;
  double radius = 0.0;

  bool contains(Complex z, double rel_tol = 1e-12) const;
};

/// Andrew's monotone chain.
ConvexHull convex_hull(std::span<const Complex> points);

/// Welzl minidisk over a deterministic permutation of the input.
EnclosingDisk smallest_enclosing_disk(std::span<const Complex> points);

/// Classification with a boundary band of half-width 1e-9 * hull.scale().
HullRegion hull_membership(const ConvexHull& hull, Complex z);

/// Same, with an explicit band half-width.
HullRegion hull_membership(const ConvexHull& hull, Complex z, double band);

/// Euclidean distance from z to the hull boundary (segment/point for degenerate hulls).
double distance_to_hull_boundary(const ConvexHull& hull, Complex z);

double distance_to_segment(Complex z, Complex a, Complex b);

}  // namespace polydescent
