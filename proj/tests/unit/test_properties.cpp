#include <gtest/gtest.h>

// Randomized invariants over small generated families.

#include "oracles.hpp"
#include "polydescent/crofton.hpp"
#include "polydescent/explore.hpp"
#include "polydescent/geometry.hpp"
#include "polydescent/random.hpp"
#include "polydescent/target.hpp"
#include "polydescent/tree.hpp"

using namespace polydescent;

namespace {

FactoredPolynomial random_poly(CounterRng& rng, int max_s, int max_mult) {
  const int s = rng.uniform_int(2, max_s);
  std::vector<Root> roots;
  while (static_cast<int>(roots.size()) < s) {
    const Complex a{rng.uniform(-1, 1), rng.uniform(-1, 1)};
    bool ok = true;
    for (const auto& r : roots) ok = ok && std::abs(r.location - a) > 0.1;
    if (ok) roots.push_back({a, rng.uniform_int(1, max_mult)});
  }
  return FactoredPolynomial(roots);
}

}  // namespace

TEST(Properties, PathsFromRandomHullPointsStayInHull) {
  CounterRng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto poly = random_poly(rng, 5, 3);
    const PolynomialTarget t(poly);
    const auto loc = poly.locations();
    // convex combination of the roots
    std::vector<double> w(loc.size());
    double total = 0;
    for (auto& x : w) total += (x = rng.uniform());
    Complex beta{};
    for (std::size_t i = 0; i < loc.size(); ++i) beta += w[i] / total * loc[i];
    const auto path = trace_descent(t, beta);
    for (const auto& s : path.samples) EXPECT_LE(oracle::distance_to_hull(loc, s.z), 1e-6 * poly.scale());
    const auto disk = oracle::enclosing_radius(loc);
    EXPECT_LE(path.arc_length, pi * poly.degree() * disk * (1 + 1e-3));
  }
}

TEST(Properties, TreesOnRandomPolynomials) {
  CounterRng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const auto poly = random_poly(rng, 6, 3);
    const PolynomialTarget t(poly);
    const auto tree = build_descent_tree(t);
    const auto rep = verify_tree(tree);
    EXPECT_TRUE(rep.passed());
    int p = 0;
    for (const auto& v : tree.vertices) p += v.kind == PointKind::critical;
    EXPECT_EQ(static_cast<int>(tree.edges.size()), static_cast<int>(poly.distinct_count()) + p - 1);
  }
}

TEST(Properties, CrossingsBoundedByDegree) {
  CounterRng rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto poly = random_poly(rng, 5, 3);
    const auto tree = build_descent_tree(PolynomialTarget(poly));
    for (const auto& e : tree.edges) EXPECT_LE(max_crossings(e.path, 180, 128).max_count, poly.degree());
  }
}

TEST(Properties, RngStreamsAreCounterAddressed) {
  CounterRng a(99), b(99, 10);
  for (int i = 0; i < 10; ++i) a.next();
  EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  CounterRng c(5);
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    const int k = c.uniform_int(-2, 3);
    EXPECT_GE(k, -2);
    EXPECT_LE(k, 3);
  }
}
