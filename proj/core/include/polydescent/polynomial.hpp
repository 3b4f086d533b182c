#pragma once

#include <functional>
#include <span>
#include <vector>

#include "polydescent/geometry.hpp"
#include "polydescent/types.hpp"

namespace polydescent {

struct Root {
  Complex location;
  int multiplicity = 1;
};

/// Monic polynomial given by its distinct roots and their multiplicities,
/// f(z) = prod_j (z - a_j)^{n_j}. Never expanded into coefficients.
class FactoredPolynomial {
 public:
  /// Throws InvalidInput if fewer than two distinct roots are given, if a
  /// multiplicity is < 1, if a location is not finite, or if two roots are
  /// closer than separation_tolerance().
  explicit FactoredPolynomial(std::vector<Root> roots);

  std::span<const Root> roots() const { return roots_; }
  std::vector<Complex> locations() const;

  /// s: number of distinct roots.
  std::size_t distinct_count() const { return roots_.size(); }
  /// N: degree, the sum of multiplicities.
  int degree() const { return degree_; }

  /// Radius of the smallest disk containing the roots (1.0 if that is zero).
  double scale() const { return scale_; }
  double separation_tolerance() const { return 1e-9 * scale_; }

 private:
  std::vector<Root> roots_;
  int degree_ = 0;
  double scale_ = 1.0;
};

Complex evaluate(const FactoredPolynomial& poly, Complex z);

/// f'(z), valid everywhere including at multiple roots.
Complex derivative(const FactoredPolynomial& poly, Complex z);

/// sum_j n_j / (z - a_j). Throws DomainError within the separation tolerance of a root.
Complex log_derivative(const FactoredPolynomial& poly, Complex z);

struct CriticalPoint {
  Complex location;
  int multiplicity = 1;
};

/// Zeros of f'/f with multiplicities. For a polynomial the multiplicities sum to s - 1.
struct CriticalPointSet {
  std::vector<CriticalPoint> points;

  int total_multiplicity() const;
};

/// Zeros of C(z) = sum_j n_j prod_{k != j} (z - a_k), found by Aberth-Ehrlich on
/// the expanded degree-(s-1) polynomial, polished by Newton on the product form,
/// then clustered (radius 1e-7 * R) into multiplicities.
CriticalPointSet critical_points(const FactoredPolynomial& poly);

/// Leading datum of f(z) - f(center) = c (z - center)^order + ...
struct LocalBranchModel {
  Complex center;
  int order = 2;
  Complex leading_coefficient;
  Complex base_value;
};

/// Local model at a critical point of multiplicity m (order m + 1), built from the
/// polynomial's own special points.
LocalBranchModel branch_model(const FactoredPolynomial& poly, Complex center, int m);

/// Discrete-Fourier extraction of the order-th Taylor coefficient of `value` at
/// `center` from samples on a circle of radius 0.1 * clearance, where clearance
/// is the distance to the nearest other special point (or singularity).
/// Throws BranchModelError when the coefficient is below the noise floor or the
/// lower-order coefficients do not vanish.
LocalBranchModel extract_branch_model(const std::function<Complex(Complex)>& value, Complex center, int m,
                                      double clearance);

}  // namespace polydescent
