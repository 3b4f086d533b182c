#pragma once

#include <span>
#include <vector>

#include "polydescent/crofton.hpp"
#include "polydescent/polynomial.hpp"
#include "polydescent/tree.hpp"

namespace polydescent {

/// Finite Blaschke product c prod_j ((z - a_j) / (1 - conj(a_j) z))^{n_j} on the
/// unit disk, normalized so that f(0) = 0 and f(1) = 1.
class BlaschkeProduct {
 public:
  std::span<const Root> zeros() const { return zeros_; }
  Complex constant() const { return constant_; }
  std::size_t distinct_count() const { return zeros_.size(); }
  int degree() const { return degree_; }

 private:
  friend BlaschkeProduct make_blaschke(std::vector<Root> zeros);
  std::vector<Root> zeros_;
  Complex constant_{1.0, 0.0};
  int degree_ = 0;
};

/// Throws InvalidInput unless there are >= 2 distinct zeros, all strictly inside
/// the unit disk, pairwise separated by more than 1e-9, one of them at 0.
BlaschkeProduct make_blaschke(std::vector<Root> zeros);

/// Throws DomainError at a pole 1/conj(a_j).
Complex blaschke_eval(const BlaschkeProduct& b, Complex z);

Complex blaschke_derivative(const BlaschkeProduct& b, Complex z);

/// sum_j n_j (1 - |a_j|^2) / ((z - a_j)(1 - conj(a_j) z)); DomainError at zeros and poles.
Complex blaschke_log_derivative(const BlaschkeProduct& b, Complex z);

/// Zeros of the log-derivative numerator inside the unit disk (multiplicities sum to s - 1).
CriticalPointSet blaschke_critical_points(const BlaschkeProduct& b);

class BlaschkeTarget final : public AnalyticTarget {
 public:
  explicit BlaschkeTarget(BlaschkeProduct b);

  Complex value(Complex z) const override { return blaschke_eval(b_, z); }
  Complex derivative(Complex z) const override { return blaschke_derivative(b_, z); }
  std::span<const SpecialPoint> special_points() const override { return special_; }
  /// Open unit disk shrunk by 1e-12.
  bool in_domain(Complex z) const override { return is_finite(z) && std::abs(z) < 1.0 - 1e-12; }
  double singularity_distance(Complex z) const override { return std::max(0.0, 1.0 - std::abs(z)); }
  double scale() const override { return 1.0; }

  const BlaschkeProduct& product() const { return b_; }
  const CriticalPointSet& critical() const { return critical_; }

 private:
  BlaschkeProduct b_;
  CriticalPointSet critical_;
  std::vector<SpecialPoint> special_;
};

struct BlaschkeEdgeReport {
  int from = -1, to = -1;
  double arc_length = 0.0;
  double crofton_length = 0.0;
  double max_abs_z = 0.0;
  int max_crossings = 0;
};

struct BlaschkeReport {
  int s = 0, n = 0, p = 0;
  int critical_multiplicity = 0;
  DescentTree tree;
  TreeReport tree_report;
  std::vector<BlaschkeEdgeReport> edges;
  double length_bound = 0.0;  // 2 pi N
  bool multiplicity_ok = false;
  bool inside_disk = false;
  bool lengths_ok = false;
  bool crossings_ok = false;  // max crossings <= 2N
  bool crofton_ok = false;    // within 0.5% of the polyline length

  bool passed() const {
    return multiplicity_ok && tree_report.passed() && inside_disk && lengths_ok && crossings_ok && crofton_ok;
  }
};

BlaschkeReport blaschke_tree_and_bounds(const BlaschkeProduct& b, int n_theta = 720);

}  // namespace polydescent
