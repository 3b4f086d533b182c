#pragma once

#include <vector>

#include "polydescent/geometry.hpp"
#include "polydescent/polynomial.hpp"
#include "polydescent/tracer.hpp"

namespace polydescent {

/// Length of a polyline as a quarter-average over directions of its line-crossing measure.
struct CroftonEstimate {
  double length = 0.0;
  int theta_samples = 0;
  /// Directional total variation of Re(z e^{-i theta_k}), i.e. the integral of N(r, theta_k) dr.
  std::vector<double> variation;
};

CroftonEstimate crofton_length(const DescentPath& path, int n_theta = 720);
CroftonEstimate crofton_length(std::span<const Complex> polyline, int n_theta = 720);

/// Crossing counts N(r, theta) of the lines {(r + iu) e^{i theta}} with a polyline.
struct CrossingProfile {
  std::vector<double> theta;
  /// Per-theta r grid (the grid follows the polyline's projection extent).
  std::vector<std::vector<double>> r;
  /// counts[k][j] = crossings of the line (r[k][j], theta[k]).
  std::vector<std::vector<int>> counts;
  int max_count = 0;
};

CrossingProfile max_crossings(const DescentPath& path, int n_theta, int n_r);
CrossingProfile max_crossings(std::span<const Complex> polyline, int n_theta, int n_r);

struct BoundReport {
  double arc_length = 0.0;
  double crofton_length = 0.0;
  double pi_N_R = 0.0;
  double two_pi_s_R = 0.0;
  HullRegion endpoint_region = HullRegion::exterior;
  bool endpoint_is_root = false;
  /// Bounds with multiplicative tolerance 1 + 1e-3. The second applies only to
  /// paths ending at a hull-boundary root.
  bool degree_bound_holds = false;
  bool boundary_bound_applies = false;
  bool boundary_bound_holds = false;
  int max_crossings = 0;
  int crossing_limit_degree = 0;   // N
  int crossing_limit_boundary = 0; // 2s
  bool crossings_within_degree = false;
  bool crossings_within_boundary = false;

  bool passed() const;
};

BoundReport verify_length_bounds(const DescentPath& path, const FactoredPolynomial& poly, const ConvexHull& hull,
                                 const EnclosingDisk& disk, int n_theta = 720, int n_r = 256);

std::vector<Complex> polyline_of(const DescentPath& path);

}  // namespace polydescent
