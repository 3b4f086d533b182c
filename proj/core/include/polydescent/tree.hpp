#pragma once

#include <vector>

#include "polydescent/tracer.hpp"

namespace polydescent {

struct TreeVertex {
  Complex location;
  PointKind kind = PointKind::root;
  int multiplicity = 1;
  /// "r0", "r1", ... for roots and "c0", ... for critical points, in vertex order.
  std::string label;
};

struct TreeEdge {
  int from = -1;  // always a critical vertex
  int to = -1;
  int branch = 0;
  DescentPath path;
};

/// Graph on roots and critical points whose edges are the descent branches.
/// Vertices are sorted by (re, im); edges by (source, branch index).
struct DescentTree {
  std::vector<TreeVertex> vertices;
  std::vector<TreeEdge> edges;
  double scale = 1.0;

  int root_count() const;
  int critical_count() const;
  /// Sum over critical vertices of (multiplicity + 1).
  int expected_edge_count() const;
  int vertex_at(Complex z, double tol) const;
};

/// Traces every branch at every critical point of the target. Throws
/// UnresolvedEdge if any branch stalls away from the special points.
DescentTree build_descent_tree(const AnalyticTarget& target, const TraceOptions& options = {});

struct TreeReport {
  int edge_count = 0;
  int expected_edges = 0;  // s + p - 1
  int vertex_count = 0;
  bool edge_count_ok = false;
  bool connected = false;
  bool acyclic = false;
  /// Sampled minimum distance between edge interiors (excluding end-point neighbourhoods).
  double min_interior_distance = 0.0;
  bool disjoint = false;
  /// Branches from one critical point all end at distinct vertices.
  bool distinct_branch_targets = false;
  int components = 0;

  bool passed() const { return edge_count_ok && connected && acyclic && disjoint; }
};

/// Exclusion radius around edge end points for the disjointness check (times tree.scale).
inline constexpr double kEndpointExclusion = 1e-3;
inline constexpr double kDisjointThreshold = 1e-6;

TreeReport verify_tree(const DescentTree& tree);

/// Composed polyline between two vertices along the unique tree path.
struct TreeRoute {
  std::vector<Complex> points;
  /// Per-point |f|, read from the edge parameterization t * |f(anchor)|.
  std::vector<double> modulus;
  std::vector<int> vertex_path;
  std::vector<int> critical_vertices;
  double length = 0.0;
  double peak_modulus = 0.0;
  Complex peak_location;
};

TreeRoute tree_route(const DescentTree& tree, int from, int to);

}  // namespace polydescent
