#include "polydescent/target.hpp"

#include <algorithm>
#include <limits>

#include "polydescent/errors.hpp"

namespace polydescent {

const char* to_string(PointKind kind) { return kind == PointKind::root ? "root" : "critical"; }

std::pair<int, double> AnalyticTarget::nearest_special(Complex z, int skip) const {
  const auto pts = special_points();
  int best = -1;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (static_cast<int>(i) == skip) continue;
    const double d = std::abs(z - pts[i].location);
    if (d < best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return {best, best_dist};
}

PolynomialTarget::PolynomialTarget(FactoredPolynomial poly)
    : poly_(std::move(poly)), critical_(critical_points(poly_)) {
  for (const auto& r : poly_.roots()) special_.push_back({r.location, PointKind::root, r.multiplicity});
  for (const auto& c : critical_.points) special_.push_back({c.location, PointKind::critical, c.multiplicity});
}

double PolynomialTarget::singularity_distance(Complex) const { return std::numeric_limits<double>::infinity(); }

LocalBranchModel branch_model(const AnalyticTarget& target, const SpecialPoint& critical) {
  if (critical.kind != PointKind::critical) throw BranchModelError("branch model requested at a root");
  double clearance = target.singularity_distance(critical.location);
  for (const auto& p : target.special_points()) {
    const double d = std::abs(p.location - critical.location);
    if (d > 1e-7 * target.scale()) clearance = std::min(clearance, d);
  }
  return extract_branch_model([&target](Complex z) { return target.value(z); }, critical.location,
                              critical.multiplicity, clearance);
}

}  // namespace polydescent
