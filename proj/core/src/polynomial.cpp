#include "polydescent/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "polydescent/coefficients.hpp"
#include "polydescent/errors.hpp"

namespace polydescent {

namespace {

// Above this degree the product is accumulated as a log-sum to avoid overflow.
constexpr int kLogSumDegree = 30;

std::vector<Complex> root_locations(std::span<const Root> roots) {
  std::vector<Complex> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.location);
  return out;
}

Complex critical_numerator(const FactoredPolynomial& poly, Complex z) {
  const auto roots = poly.roots();
  Complex sum{};
  for (std::size_t j = 0; j < roots.size(); ++j) {
    Complex term{static_cast<double>(roots[j].multiplicity), 0.0};
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (k != j) term *= z - roots[k].location;
    }
    sum += term;
  }
  return sum;
}

}  // namespace

FactoredPolynomial::FactoredPolynomial(std::vector<Root> roots) : roots_(std::move(roots)) {
  if (roots_.size() < 2) throw InvalidInput("polynomial needs at least two distinct roots");
  for (const auto& r : roots_) {
    if (!is_finite(r.location)) throw InvalidInput("root location is not finite");
    if (r.multiplicity < 1) throw InvalidInput("root multiplicity must be positive");
    degree_ += r.multiplicity;
  }
  const auto locs = root_locations(roots_);
  const double radius = smallest_enclosing_disk(locs).radius;
  scale_ = radius > 0.0 ? radius : 1.0;
  const double tol = separation_tolerance();
  for (std::size_t i = 0; i < locs.size(); ++i) {
    for (std::size_t j = i + 1; j < locs.size(); ++j) {
      if (std::abs(locs[i] - locs[j]) <= tol) {
        throw InvalidInput("roots " + std::to_string(i) + " and " + std::to_string(j) +
                           " are closer than the separation tolerance");
      }
    }
  }
}

std::vector<Complex> FactoredPolynomial::locations() const { return root_locations(roots_); }

int CriticalPointSet::total_multiplicity() const {
  return std::accumulate(points.begin(), points.end(), 0,
                         [](int acc, const CriticalPoint& c) { return acc + c.multiplicity; });
}

Complex evaluate(const FactoredPolynomial& poly, Complex z) {
  if (poly.degree() <= kLogSumDegree) {
    Complex acc{1.0, 0.0};
    for (const auto& r : poly.roots()) acc *= ipow(z - r.location, r.multiplicity);
    return acc;
  }
  double log_mag = 0.0, phase = 0.0;
  for (const auto& r : poly.roots()) {
    const Complex d = z - r.location;
    if (d == Complex{}) return Complex{};
    log_mag += r.multiplicity * std::log(std::abs(d));
    phase += r.multiplicity * std::arg(d);
  }
  return std::polar(std::exp(log_mag), phase);
}

Complex derivative(const FactoredPolynomial& poly, Complex z) {
  const auto roots = poly.roots();
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& r : roots) nearest = std::min(nearest, std::abs(z - r.location));
  if (nearest > 1e-6 * poly.scale()) return evaluate(poly, z) * log_derivative(poly, z);

  // Product rule term by term; avoids dividing by a vanishing factor.
  Complex sum{};
  for (std::size_t j = 0; j < roots.size(); ++j) {
    Complex term = static_cast<double>(roots[j].multiplicity) * ipow(z - roots[j].location, roots[j].multiplicity - 1);
    for (std::size_t k = 0; k < roots.size(); ++k) {
      if (k != j) term *= ipow(z - roots[k].location, roots[k].multiplicity);
    }
    sum += term;
  }
  return sum;
}

Complex log_derivative(const FactoredPolynomial& poly, Complex z) {
  const double tol = poly.separation_tolerance();
  Complex sum{};
  for (const auto& r : poly.roots()) {
    const Complex d = z - r.location;
    if (std::abs(d) <= tol) throw DomainError("log_derivative evaluated at a root");
    sum += static_cast<double>(r.multiplicity) / d;
  }
  return sum;
}

CriticalPointSet critical_points(const FactoredPolynomial& poly) {
  const auto roots = poly.roots();
  const std::size_t s = roots.size();
  const double scale = poly.scale();

  Coefficients numerator(s, Complex{});
  for (std::size_t j = 0; j < s; ++j) {
    std::vector<Complex> others;
    for (std::size_t k = 0; k < s; ++k) {
      if (k != j) others.push_back(roots[k].location);
    }
    const Coefficients part = from_roots(others);
    for (std::size_t i = 0; i < part.size(); ++i) numerator[i] += static_cast<double>(roots[j].multiplicity) * part[i];
  }

  std::vector<Complex> zeros = aberth_roots(numerator);
  if (zeros.size() != s - 1) throw CriticalPointError("critical_points: unexpected numerator degree");

  const Coefficients dnum = derivative(numerator);
  for (auto& z : zeros) {
    Complex value = critical_numerator(poly, z);
    for (int it = 0; it < 5 && value != Complex{}; ++it) {
      const Complex dv = horner(dnum, z);
      if (dv == Complex{}) break;
      const Complex cand = z - value / dv;
      const Complex cand_value = critical_numerator(poly, cand);
      if (!(std::abs(cand_value) < std::abs(value))) break;
      z = cand;
      value = cand_value;
    }
  }

  // Single-linkage clustering at radius 1e-7 * R.
  const double radius = 1e-7 * scale;
  std::vector<int> label(zeros.size(), -1);
  int next_label = 0;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    if (label[i] >= 0) continue;
    label[i] = next_label;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      const std::size_t a = stack.back();
      stack.pop_back();
      for (std::size_t b = 0; b < zeros.size(); ++b) {
        if (label[b] < 0 && std::abs(zeros[a] - zeros[b]) <= radius) {
          label[b] = next_label;
          stack.push_back(b);
        }
      }
    }
    ++next_label;
  }

  CriticalPointSet out;
  for (int c = 0; c < next_label; ++c) {
    Complex sum{};
    int count = 0;
    for (std::size_t i = 0; i < zeros.size(); ++i) {
      if (label[i] == c) {
        sum += zeros[i];
        ++count;
      }
    }
    out.points.push_back({sum / static_cast<double>(count), count});
  }

  if (out.total_multiplicity() != static_cast<int>(s) - 1) {
    throw CriticalPointError("critical_points: multiplicities do not sum to s - 1");
  }
  for (const auto& c : out.points) {
    for (const auto& r : roots) {
      if (std::abs(c.location - r.location) <= poly.separation_tolerance()) {
        throw CriticalPointError("critical_points: a critical point coincides with a root");
      }
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    return a.location.real() < b.location.real() ||
           (a.location.real() == b.location.real() && a.location.imag() < b.location.imag());
  });
  return out;
}

LocalBranchModel extract_branch_model(const std::function<Complex(Complex)>& value, Complex center, int m,
                                      double clearance) {
  if (m < 1) throw BranchModelError("branch model needs a critical multiplicity >= 1");
  if (!(clearance > 0.0) || !std::isfinite(clearance)) throw BranchModelError("branch model needs a positive clearance");
  const int order = m + 1;
  const int samples = std::max(4 * order, 64);
  const double rho = 0.1 * clearance;

  std::vector<Complex> values(samples);
  double max_abs = 0.0;
  for (int j = 0; j < samples; ++j) {
    values[j] = value(center + std::polar(rho, two_pi * j / samples));
    max_abs = std::max(max_abs, std::abs(values[j]));
  }
  // Scaled Taylor coefficients a_k * rho^k for k = 1..order.
  std::vector<Complex> scaled(order + 1);
  for (int k = 1; k <= order; ++k) {
    Complex acc{};
    for (int j = 0; j < samples; ++j) acc += values[j] * std::polar(1.0, -two_pi * static_cast<double>(j) * k / samples);
    scaled[k] = acc / static_cast<double>(samples);
  }
  const double lead = std::abs(scaled[order]);
  const double noise = 1e3 * std::numeric_limits<double>::epsilon() * max_abs;
  if (!(lead > noise)) throw BranchModelError("branch model: leading coefficient below the noise floor");
  for (int k = 1; k < order; ++k) {
    if (std::abs(scaled[k]) > 1e-4 * lead + noise) {
      throw BranchModelError("branch model: lower-order coefficient " + std::to_string(k) +
                             " does not vanish; multiplicity is inconsistent");
    }
  }
  return {center, order, scaled[order] / std::pow(rho, order), value(center)};
}

LocalBranchModel branch_model(const FactoredPolynomial& poly, Complex center, int m) {
  double clearance = std::numeric_limits<double>::infinity();
  for (const auto& r : poly.roots()) clearance = std::min(clearance, std::abs(center - r.location));
  for (const auto& c : critical_points(poly).points) {
    const double d = std::abs(center - c.location);
    if (d > 1e-7 * poly.scale()) clearance = std::min(clearance, d);
  }
  return extract_branch_model([&poly](Complex z) { return evaluate(poly, z); }, center, m, clearance);
}

}  // namespace polydescent
