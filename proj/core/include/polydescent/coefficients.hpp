#pragma once

#include <span>
#include <vector>

#include "polydescent/types.hpp"

namespace polydescent {

/// Dense polynomial coefficients, lowest degree first.
using Coefficients = std::vector<Complex>;

Coefficients multiply(std::span<const Complex> a, std::span<const Complex> b);

/// prod (z - r) over the given roots.
Coefficients from_roots(std::span<const Complex> roots);

Coefficients derivative(std::span<const Complex> coeffs);

Complex horner(std::span<const Complex> coeffs, Complex z);

/// Drops leading coefficients below rel_tol * max|coeff|.
Coefficients trim(Coefficients coeffs, double rel_tol = 0.0);

struct AberthOptions {
  int max_iterations = 600;
  double tolerance = 1e-15;
};

/// All roots (with repetition) of the polynomial by Aberth-Ehrlich simultaneous
/// iteration. Throws CriticalPointError if the iteration produces non-finite values.
std::vector<Complex> aberth_roots(std::span<const Complex> coeffs, const AberthOptions& options = {});

}  // namespace polydescent
