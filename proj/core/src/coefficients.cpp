#include "polydescent/coefficients.hpp"

#include <algorithm>
#include <cmath>

#include "polydescent/errors.hpp"

namespace polydescent {

Coefficients multiply(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  Coefficients out(a.size() + b.size() - 1, Complex{});
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Coefficients from_roots(std::span<const Complex> roots) {
  Coefficients out{Complex{1.0, 0.0}};
  for (const Complex r : roots) {
    const Complex lin[] = {-r, Complex{1.0, 0.0}};
    out = multiply(out, lin);
  }
  return out;
}

Coefficients derivative(std::span<const Complex> coeffs) {
  if (coeffs.size() <= 1) return {Complex{}};
  Coefficients out(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) out[k - 1] = static_cast<double>(k) * coeffs[k];
  return out;
}

Complex horner(std::span<const Complex> coeffs, Complex z) {
  Complex acc{};
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

Coefficients trim(Coefficients coeffs, double rel_tol) {
  double big = 0.0;
  for (const auto& c : coeffs) big = std::max(big, std::abs(c));
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= rel_tol * big) coeffs.pop_back();
  return coeffs;
}

std::vector<Complex> aberth_roots(std::span<const Complex> coeffs_in, const AberthOptions& options) {
  const Coefficients coeffs = trim(Coefficients(coeffs_in.begin(), coeffs_in.end()));
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};
  const Complex lead = coeffs[n];
  if (lead == Complex{}) throw CriticalPointError("aberth_roots: zero polynomial");
  if (n == 1) return {-coeffs[0] / lead};

  const Coefficients dcoeffs = derivative(coeffs);

  // Start on a circle about the root centroid, radius from the Fujiwara bound
  // of the shifted polynomial's coefficient magnitudes.
  const Complex centroid = -coeffs[n - 1] / (static_cast<double>(n) * lead);
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    radius = std::max(radius, std::pow(std::abs(coeffs[n - k] / lead), 1.0 / static_cast<double>(k)));
  }
  radius = std::max(radius + std::abs(centroid), 1e-3);
  double scale = radius;
  std::vector<Complex> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = two_pi * static_cast<double>(i) / static_cast<double>(n) + 0.4;
    z[i] = centroid + std::polar(0.5 * radius, angle);
  }

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    double max_step = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex p = horner(coeffs, z[i]);
      if (p == Complex{}) continue;
      const Complex dp = horner(dcoeffs, z[i]);
      const Complex ratio = p / dp;
      Complex repulsion{};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && z[i] != z[j]) repulsion += 1.0 / (z[i] - z[j]);
      }
      Complex step = ratio / (1.0 - ratio * repulsion);
      if (!is_finite(step)) step = ratio;
      if (!is_finite(step)) {
        // dp vanished exactly; nudge off the stationary point.
        step = Complex{1e-8 * scale, 1e-8 * scale};
      }
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / (std::abs(z[i]) + scale));
    }
    if (max_step <= options.tolerance) break;
  }
  for (const auto& r : z) {
    if (!is_finite(r)) throw CriticalPointError("aberth_roots: iteration diverged");
  }
  return z;
}

}  // namespace polydescent
