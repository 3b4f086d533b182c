#pragma once

#include <cmath>
#include <complex>

namespace polydescent {

using Complex = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double two_pi = 2.0 * pi;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// z^k for k >= 0 by repeated squaring; std::pow on complex goes through exp/log.
inline Complex ipow(Complex z, int k) {
  Complex result{1.0, 0.0};
  while (k > 0) {
    if (k & 1) result *= z;
    z *= z;
    k >>= 1;
  }
  return result;
}

/// Angle folded into [0, 2*pi).
inline double wrap_angle(double a) {
  a = std::fmod(a, two_pi);
  if (a < 0.0) a += two_pi;
  return a;
}

}  // namespace polydescent
