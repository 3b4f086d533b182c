#pragma once

#include <span>
#include <vector>

#include "polydescent/polynomial.hpp"

namespace polydescent {

enum class PointKind { root, critical };

const char* to_string(PointKind kind);

struct SpecialPoint {
  Complex location;
  PointKind kind = PointKind::root;
  int multiplicity = 1;
};

/// An analytic map together with its zeros and the zeros of its logarithmic
/// derivative. Implementations are immutable and safe to share across threads.
class AnalyticTarget {
 public:
  virtual ~AnalyticTarget() = default;

  virtual Complex value(Complex z) const = 0;
  virtual Complex derivative(Complex z) const = 0;
  virtual std::span<const SpecialPoint> special_points() const = 0;
  /// True iff z lies in the admissible region.
  virtual bool in_domain(Complex z) const = 0;
  /// Distance from z to the nearest singularity or domain boundary.
  virtual double singularity_distance(Complex z) const = 0;
  /// Characteristic length: R for polynomials, 1 for Blaschke products.
  virtual double scale() const = 0;

  /// Index of the nearest special point and its distance, optionally skipping one index.
  std::pair<int, double> nearest_special(Complex z, int skip = -1) const;
};

class PolynomialTarget final : public AnalyticTarget {
 public:
  explicit PolynomialTarget(FactoredPolynomial poly);

  Complex value(Complex z) const override { return evaluate(poly_, z); }
  Complex derivative(Complex z) const override { return polydescent::derivative(poly_, z); }
  std::span<const SpecialPoint> special_points() const override { return special_; }
  bool in_domain(Complex z) const override { return is_finite(z); }
  double singularity_distance(Complex) const override;
  double scale() const override { return poly_.scale(); }

  const FactoredPolynomial& polynomial() const { return poly_; }
  const CriticalPointSet& critical() const { return critical_; }

 private:
  FactoredPolynomial poly_;
  CriticalPointSet critical_;
  std::vector<SpecialPoint> special_;
};

/// Local model at a critical special point of any target; the sampling circle
/// stays clear of the other special points and of the singularities.
LocalBranchModel branch_model(const AnalyticTarget& target, const SpecialPoint& critical);

}  // namespace polydescent
