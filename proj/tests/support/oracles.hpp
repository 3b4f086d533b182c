#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

namespace oracle {

using cd = std::complex<double>;

/// Coefficients of prod (z - a_j)^{n_j}, low degree first.
inline std::vector<cd> expand(const std::vector<std::pair<cd, int>>& roots) {
  std::vector<cd> c{1.0};
  for (const auto& [a, n] : roots) {
    for (int k = 0; k < n; ++k) {
      std::vector<cd> next(c.size() + 1, 0.0);
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= a * c[i];
      }
      c = std::move(next);
    }
  }
  return c;
}

inline cd horner(const std::vector<cd>& c, cd z) {
  cd acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
  return acc;
}

/// Taylor coefficients of the polynomial at z0: coefficient k = p^{(k)}(z0) / k!.
inline std::vector<cd> taylor_shift(std::vector<cd> c, cd z0) {
  const std::size_t n = c.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = n - 1; i > k; --i) c[i - 1] += z0 * c[i];
  }
  return c;
}

inline double bisect(const std::function<double(double)>& g, double lo, double hi, int iterations = 200) {
  double glo = g(lo);
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double polyline_length(const std::vector<cd>& pts) {
  double len = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) len += std::abs(pts[i] - pts[i - 1]);
  return len;
}

inline double cross(cd a, cd b, cd c) {
  return (b.real() - a.real()) * (c.imag() - a.imag()) - (b.imag() - a.imag()) * (c.real() - a.real());
}

/// Distance from z to the convex hull of pts (0 inside), brute force over all
/// pairs: z is inside iff no pair (p, q) has every point on one side with z strictly on the other.
inline double distance_to_hull(const std::vector<cd>& pts, cd z) {
  auto seg = [](cd p, cd a, cd b) {
    const cd d = b - a;
    const double len2 = std::norm(d);
    double t = len2 > 0 ? ((p - a) * std::conj(d)).real() / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * d));
  };
  bool outside = false;
  double best = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    best = std::min(best, std::abs(z - pts[i]));
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      best = std::min(best, seg(z, pts[i], pts[j]));
      bool supporting = true;
      for (std::size_t k = 0; k < pts.size() && supporting; ++k) {
        supporting = cross(pts[i], pts[j], pts[k]) >= -1e-14;
      }
      if (supporting && cross(pts[i], pts[j], z) < -1e-14) outside = true;
    }
  }
  return outside ? best : 0.0;
}

/// True iff z lies on the boundary of the hull (within tol), brute force.
inline bool on_hull_boundary(const std::vector<cd>& pts, cd z, double tol) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (i == j) continue;
      bool supporting = true;
      for (std::size_t k = 0; k < pts.size() && supporting; ++k) {
        supporting = cross(pts[i], pts[j], pts[k]) >= -1e-12;
      }
      if (!supporting) continue;
      const cd d = pts[j] - pts[i];
      const double t = ((z - pts[i]) * std::conj(d)).real() / std::norm(d);
      if (t >= -1e-12 && t <= 1 + 1e-12 && std::abs(z - (pts[i] + t * d)) <= tol) return true;
    }
  }
  return false;
}

/// Smallest enclosing radius by exhaustive search over pairs and triples.
inline double enclosing_radius(const std::vector<cd>& pts) {
  auto covers = [&](cd c, double r) {
    return std::all_of(pts.begin(), pts.end(), [&](cd p) { return std::abs(p - c) <= r * (1 + 1e-12) + 1e-15; });
  };
  double best = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const cd c = 0.5 * (pts[i] + pts[j]);
      const double r = 0.5 * std::abs(pts[i] - pts[j]);
      if (r < best && covers(c, r)) best = r;
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        const cd a = pts[i], b = pts[j], e = pts[k];
        const double d = 2 * (a.real() * (b.imag() - e.imag()) + b.real() * (e.imag() - a.imag()) +
                              e.real() * (a.imag() - b.imag()));
        if (std::abs(d) < 1e-300) continue;
        const double ux = (std::norm(a) * (b.imag() - e.imag()) + std::norm(b) * (e.imag() - a.imag()) +
                           std::norm(e) * (a.imag() - b.imag())) / d;
        const double uy = (std::norm(a) * (e.real() - b.real()) + std::norm(b) * (a.real() - e.real()) +
                           std::norm(e) * (b.real() - a.real())) / d;
        const cd c{ux, uy};
        const double rr = std::abs(a - c);
        if (rr < best && covers(c, rr)) best = rr;
      }
    }
  }
  return pts.size() == 1 ? 0.0 : best;
}

/// Breadth-first count of 4-connected components of an n x n boolean grid.
inline int count_components(const std::vector<char>& inside, int n) {
  std::vector<char> seen(inside.size(), 0);
  int count = 0;
  for (int start = 0; start < n * n; ++start) {
    if (!inside[start] || seen[start]) continue;
    ++count;
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    while (!q.empty()) {
      const int c = q.front();
      q.pop();
      const int x = c % n, y = c / n;
      const int nb[4][2] = {{x - 1, y}, {x + 1, y}, {x, y - 1}, {x, y + 1}};
      for (const auto& p : nb) {
        if (p[0] < 0 || p[1] < 0 || p[0] >= n || p[1] >= n) continue;
        const int k = p[1] * n + p[0];
        if (inside[k] && !seen[k]) {
          seen[k] = 1;
          q.push(k);
        }
      }
    }
  }
  return count;
}

}  // namespace oracle
