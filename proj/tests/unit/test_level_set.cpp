#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "polydescent/errors.hpp"
#include "polydescent/level_set.hpp"
#include "polydescent/target.hpp"

using namespace polydescent;

namespace {

const Complex omega = std::polar(1.0, 2.0 * pi / 3.0);

FactoredPolynomial quadratic() { return FactoredPolynomial({{{1, 0}, 1}, {{-1, 0}, 1}}); }
FactoredPolynomial cubic() { return FactoredPolynomial({{{1, 0}, 1}, {omega, 1}, {std::conj(omega), 1}}); }
FactoredPolynomial double_zero() { return FactoredPolynomial({{{0, 0}, 2}, {{1, 0}, 1}}); }

int critical_vertex(const DescentTree& t) {
  for (std::size_t i = 0; i < t.vertices.size(); ++i)
    if (t.vertices[i].kind == PointKind::critical) return static_cast<int>(i);
  return -1;
}

}  // namespace

TEST(LevelComponents, Examples) {
  auto rep = count_level_components(quadratic(), 0.5);
  EXPECT_EQ(rep.grid_components, 2);
  EXPECT_EQ(rep.walsh_components, 2);
  rep = count_level_components(quadratic(), 1.5);
  EXPECT_EQ(rep.grid_components, 1);
  EXPECT_EQ(rep.walsh_components, 1);
  rep = count_level_components(cubic(), 0.5);
  EXPECT_EQ(rep.grid_components, 3);
  EXPECT_EQ(rep.walsh_components, 3);
  EXPECT_TRUE(rep.agrees());
}

TEST(LevelComponents, GridCountMatchesBreadthFirstOracle) {
  const auto poly = FactoredPolynomial({{{0.3, 0.2}, 2}, {{-0.5, 0.4}, 1}, {{0.1, -0.6}, 3}});
  for (double r : {0.01, 0.05, 0.2}) {
    const auto grid = level_set_grid(poly, r, 256);
    std::vector<char> inside(grid.labels.size());
    for (int iy = 0; iy < grid.resolution; ++iy)
      for (int ix = 0; ix < grid.resolution; ++ix)
        inside[iy * grid.resolution + ix] = std::abs(evaluate(poly, grid.cell_center(ix, iy))) < r;
    EXPECT_EQ(grid.components, oracle::count_components(inside, grid.resolution)) << "r " << r;
  }
}

TEST(LevelComponents, RejectsNearCriticalLevel) {
  EXPECT_THROW(count_level_components(quadratic(), 1.0), NearCriticalValue);
  EXPECT_THROW(count_level_components(quadratic(), -1.0), std::invalid_argument);
}

TEST(WalshCount, CountsCriticalValuesAboveLevel) {
  const auto crit = critical_points(cubic());
  EXPECT_EQ(walsh_count(crit, cubic(), 0.5), 3);
  EXPECT_EQ(walsh_count(crit, cubic(), 2.0), 1);
}

TEST(SeparationWitness, Examples) {
  for (const auto& poly : {quadratic(), cubic(), double_zero()}) {
    const PolynomialTarget target(poly);
    const auto tree = build_descent_tree(target);
    const int c = critical_vertex(tree);
    const auto rep = separation_witness(poly, tree, c);
    EXPECT_TRUE(rep.separated);
    const double fc = std::abs(evaluate(poly, tree.vertices[c].location));
    EXPECT_NEAR(rep.critical_value, fc, 1e-12);
    EXPECT_NEAR(rep.r, fc * (1 - 1e-3), 1e-12);
    EXPECT_EQ(rep.root_vertices.size(), static_cast<std::size_t>(tree.vertices[c].multiplicity + 1));
  }
}

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  const auto gl = gauss_legendre(32);
  double sum_w = 0, x62 = 0;
  for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
    sum_w += gl.weights[i];
    x62 += gl.weights[i] * std::pow(gl.nodes[i], 62);
  }
  EXPECT_NEAR(sum_w, 2.0, 1e-14);
  EXPECT_NEAR(x62, 2.0 / 63.0, 1e-14);
}

TEST(IntegralBound, QuadraticAntiderivative) {
  const auto poly = quadratic();
  const auto tree = build_descent_tree(PolynomialTarget(poly));
  const int from = tree.vertex_at({-1, 0}, 1e-9), to = tree.vertex_at({1, 0}, 1e-9);
  const auto rep = integral_bound_check(poly, tree, from, to);
  // F(z) = -(z + 1)^2 e^{-z} is an antiderivative of (z^2 - 1) e^{-z}
  auto F = [](Complex z) { return -(z + 1.0) * (z + 1.0) * std::exp(-z); };
  const Complex want = F(1.0) - F(-1.0);
  EXPECT_NEAR(std::abs(rep.value - want), 0.0, 1e-9);
  EXPECT_NEAR(rep.magnitude, 4.0 / std::exp(1.0), 1e-9);
  EXPECT_NEAR(rep.bound, 2 * pi * 2 * 1 * std::exp(1.0) * 1, 1e-9);
  EXPECT_TRUE(rep.passed);
}

TEST(IntegralBound, CubicAndDoubleZero) {
  {
    const auto poly = cubic();
    const auto tree = build_descent_tree(PolynomialTarget(poly));
    const auto rep = integral_bound_check(poly, tree, tree.vertex_at(1.0, 1e-9), tree.vertex_at(omega, 1e-9));
    // f is entire, so the integral equals the straight-line integral 1 -> omega
    // evaluated with the antiderivative of (z^3 - 1) e^{-z}
    auto F = [](Complex z) { return -std::exp(-z) * (z * z * z + 3.0 * z * z + 6.0 * z + 5.0); };
    EXPECT_NEAR(std::abs(rep.value - (F(omega) - F(1.0))), 0.0, 1e-9);
    EXPECT_NEAR(rep.bound, 2 * pi * 3 * std::exp(1.0), 1e-9);
    EXPECT_TRUE(rep.passed);
  }
  {
    const auto poly = double_zero();
    const auto tree = build_descent_tree(PolynomialTarget(poly));
    const auto rep = integral_bound_check(poly, tree, tree.vertex_at(0.0, 1e-9), tree.vertex_at(1.0, 1e-9));
    auto F = [](Complex z) { return -std::exp(-z) * (z * z * z + 2.0 * z * z + 4.0 * z + 4.0); };
    EXPECT_NEAR(std::abs(rep.value - (F(1.0) - F(0.0))), 0.0, 1e-10);
    EXPECT_NEAR(rep.bound, 2 * pi * 3 * std::exp(1.0) * 4.0 / 27.0, 1e-9);
    EXPECT_TRUE(rep.passed);
  }
}
