#pragma once

#include <string>

#include "polydescent/level_set.hpp"
#include "polydescent/tree.hpp"

namespace polydescent {

/// Graphviz description with vertex positions ("pos" attributes, neato -n friendly).
std::string tree_to_dot(const DescentTree& tree);

enum class Background { none, modulus, phase };

struct SvgOptions {
  int width = 800;
  Background background = Background::none;
  int background_cells = 160;
  /// Hull of the roots, drawn as an outline when non-empty.
  std::vector<Complex> hull;
};

std::string tree_to_svg(const DescentTree& tree, const AnalyticTarget& target, const SvgOptions& options = {});

/// Component-colored picture of a level-set grid with the roots marked.
std::string level_set_to_svg(const LevelSetGrid& grid, const FactoredPolynomial& poly, int width = 800);

}  // namespace polydescent
