#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polydescent/blaschke.hpp"
#include "polydescent/polynomial.hpp"

namespace polydescent {

enum class InstanceKind { polynomial, blaschke };

const char* to_string(InstanceKind kind);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::polynomial;
  std::uint64_t seed = 42;
  int min_distinct = 2;
  int max_distinct = 6;
  int max_multiplicity = 4;
  int max_degree = 12;
  /// Roots are drawn uniformly from the disk of this radius (Blaschke zeros: 0.8).
  double region_radius = 1.0;
  double min_separation = 0.05;
  /// Give hull-interior roots high multiplicity more often.
  bool interior_bias = true;
};

/// Instance `index` of the family; a pure function of (spec, index).
FactoredPolynomial generate_polynomial(const InstanceSpec& spec, std::uint64_t index);
BlaschkeProduct generate_blaschke(const InstanceSpec& spec, std::uint64_t index);

struct ExplorationRow {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  InstanceKind kind = InstanceKind::polynomial;
  int N = 0, s = 0, p = 0;
  double R = 0.0;
  int edges = 0;
  double max_edge_length = 0.0;
  /// max length / (pi N R) and max length / (2 pi s R); for Blaschke rows R = 1
  /// and the first ratio is against 2 pi N.
  double ratio_degree = 0.0;
  double ratio_distinct = 0.0;
  /// Whether the longest edge ends at a hull-boundary root.
  bool max_edge_boundary = false;
  /// Largest length / (2 pi s R) among edges ending on / off the hull boundary (-1 when none).
  double max_boundary_ratio = -1.0;
  double max_interior_ratio = -1.0;
  /// Every root is a hull vertex or lies on a hull edge.
  bool all_roots_boundary = false;
  bool tree_ok = false;
  bool failed = false;
  std::string failure;
};

ExplorationRow explore_polynomial(const FactoredPolynomial& poly, std::uint64_t index = 0, std::uint64_t seed = 0);
ExplorationRow explore_blaschke(const BlaschkeProduct& b, std::uint64_t index = 0, std::uint64_t seed = 0);

/// Worker count: POLYDESCENT_THREADS when set and positive, else hardware concurrency.
int thread_budget();

/// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

/// Rows are ordered by instance index whatever the completion order.
std::vector<ExplorationRow> explore_lengths(const InstanceSpec& spec, int count, int threads = 0);

inline constexpr const char* kExplorationCsvVersion = "polydescent-explore-v1";

std::string exploration_csv(const std::vector<ExplorationRow>& rows);
nlohmann::json exploration_summary(const std::vector<ExplorationRow>& rows);

}  // namespace polydescent
