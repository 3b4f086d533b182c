#pragma once

#include <span>
#include <vector>

#include "polydescent/target.hpp"

namespace polydescent {

enum class EndpointKind { root, critical, unresolved };

const char* to_string(EndpointKind kind);

struct PathSample {
  double t = 1.0;
  Complex z;
};

struct Endpoint {
  EndpointKind kind = EndpointKind::unresolved;
  Complex location;
  /// Index into the target's special points, -1 when unresolved.
  int special_index = -1;
};

/// Sampled solution of f(z) = t * f(anchor) for t running from 1 down to the
/// terminal parameter; samples carry strictly decreasing t.
struct DescentPath {
  Complex anchor;
  Complex anchor_value;
  std::vector<PathSample> samples;
  Endpoint endpoint;
  double arc_length = 0.0;
  /// Critical points passed through when continuation is enabled.
  int continuations = 0;
};

struct BranchSeed {
  Complex critical;
  Complex direction;  // unit modulus
  int branch_index = 0;
  int order = 2;
};

struct TraceOptions {
  /// Step caps: |dz| <= step_cap * scale and |dz| <= clearance_fraction * (distance to nearest special point).
  double step_cap = 0.01;
  double clearance_fraction = 0.25;
  /// Largest accepted rotation of the tangent within one step (radians).
  double max_turn = 0.1;
  /// Smallest parameter step, relative to the current t.
  double min_parameter_step = 1e-14;
  int max_newton_iterations = 8;
  double newton_tolerance = 1e-12;
  /// Snap to a root once within snap_radius * scale.
  double snap_radius = 1e-8;
  /// Mid-path critical hit detection radius (relative to scale and |f(anchor)|).
  double critical_hit_radius = 1e-7;
  /// At the step floor, classify by a special point within this radius (relative to scale).
  double stall_capture_radius = 1e-6;
  /// Continue through a critical point hit mid-path along the descent branch of
  /// smallest argument in [0, 2*pi) instead of stopping there.
  bool continue_through_critical = false;
  /// Return unresolved paths instead of throwing StalledCorrection.
  bool allow_unresolved = false;
  int max_steps = 200000;
};

/// Descent path from an arbitrary non-critical point beta (t from 1 down to 0).
DescentPath trace_descent(const AnalyticTarget& target, Complex beta, const TraceOptions& options = {});

/// The m+1 unit directions along which |f| decreases to first order from a critical point.
std::vector<BranchSeed> descent_directions(const AnalyticTarget& target, const SpecialPoint& critical);

/// All m+1 descent paths issued from a critical point, each continued to a special point.
std::vector<DescentPath> trace_all_branches(const AnalyticTarget& target, const SpecialPoint& critical,
                                            const TraceOptions& options = {});

double arc_length(std::span<const PathSample> samples);
double arc_length(const DescentPath& path);

/// Minimum distance between the samples of two paths, ignoring samples within
/// `exclusion` of either path's own start or end point.
double interior_separation(const DescentPath& a, const DescentPath& b, double exclusion);

/// Argument of the first step of the path, measured from its anchor.
double initial_tangent(const DescentPath& path);

}  // namespace polydescent
