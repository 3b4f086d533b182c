#pragma once

#include <limits>
#include <vector>

#include "polydescent/polynomial.hpp"
#include "polydescent/tree.hpp"

namespace polydescent {

/// Cell classification of the sublevel set {|f| < r} on a square grid, with
/// 4-connected component labels (-1 for cells outside the set).
struct LevelSetGrid {
  Complex center;
  double half_width = 1.0;
  int resolution = 0;
  double r = 0.0;
  std::vector<int> labels;
  int components = 0;

  double cell_size() const { return 2.0 * half_width / resolution; }
  Complex cell_center(int ix, int iy) const;
  /// Cell index containing z, or -1 outside the box.
  int cell_of(Complex z) const;
};

/// Box centred on the smallest enclosing disk, half-width 1.2 R, widened when
/// needed so that it contains all of {|f| < r}.
LevelSetGrid level_set_grid(const FactoredPolynomial& poly, double r, int resolution);

/// 1 + sum of multiplicities of critical points with |f(beta)| >= r.
int walsh_count(const CriticalPointSet& critical, const FactoredPolynomial& poly, double r);

struct ComponentReport {
  double r = 0.0;
  int resolution = 0;
  int grid_components = 0;
  int walsh_components = 0;
  /// Component label of each root (in FactoredPolynomial order).
  std::vector<int> root_component;

  bool agrees() const { return grid_components == walsh_components; }
};

/// Throws NearCriticalValue when r is within 1% of a critical value, and
/// std::invalid_argument for r <= 0 or resolution < 64.
ComponentReport count_level_components(const FactoredPolynomial& poly, double r, int resolution = 512);

struct SeparationReport {
  int critical_vertex = -1;
  double critical_value = 0.0;  // |f(beta_j)|
  double r = 0.0;
  int resolution = 0;
  std::vector<int> root_vertices;  // branch end points
  std::vector<int> component_ids;
  bool separated = false;
  /// Any path between two of the roots reaches at least this |f|.
  double witnessed_lower_bound = 0.0;
};

/// At r = |f(beta_j)| (1 - 1e-3), checks that the roots reached by the branches
/// from beta_j lie in pairwise distinct components of {|f| < r}.
SeparationReport separation_witness(const FactoredPolynomial& poly, const DescentTree& tree, int critical_vertex);

struct GaussLegendre {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

GaussLegendre gauss_legendre(int n);

/// Integral of f(z) e^{-z} dz along a polyline, with n Gauss-Legendre nodes per segment.
Complex route_integral(const FactoredPolynomial& poly, std::span<const Complex> polyline, int nodes = 32);

struct IntegralReport {
  int from = -1, via = -1, to = -1;
  Complex value;
  double magnitude = 0.0;
  double origin_radius = 0.0;  // max |root|
  double critical_value = 0.0;
  double bound = 0.0;          // 2 pi N R e^R |f(beta_j)|
  bool both_boundary = false;
  double sharpened_bound = 0.0;  // 4 pi s R e^R |f(beta_j)|, meaningful when both_boundary
  double route_length = 0.0;
  double route_peak = 0.0;
  /// |I_64 - I_32| / |I_32|
  double convergence = 0.0;
  bool passed = false;

  double margin() const { return magnitude > 0.0 ? bound / magnitude : std::numeric_limits<double>::infinity(); }
};

/// Requires a two-edge route root -> critical -> root in the tree.
IntegralReport integral_bound_check(const FactoredPolynomial& poly, const DescentTree& tree, int root_from,
                                    int root_to, int nodes = 32);

}  // namespace polydescent
