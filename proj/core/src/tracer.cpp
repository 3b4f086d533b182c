#include "polydescent/tracer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "polydescent/errors.hpp"

namespace polydescent {

namespace {

int find_special(const AnalyticTarget& target, Complex z, double radius) {
  const auto [index, dist] = target.nearest_special(z);
  return dist <= radius ? index : -1;
}

double clearance_of(const AnalyticTarget& target, int index) {
  const Complex c = target.special_points()[index].location;
  return std::min(target.nearest_special(c, index).second, target.singularity_distance(c));
}

/// Radial offset of a branch seed: 1e-4 of the clearance, enlarged so the seed
/// parameter 1 - |c| delta^l / |f| stays well resolved in double precision for
/// high branch orders.
double seed_offset(const LocalBranchModel& model, double clearance) {
  const double base = 1e-4 * clearance;
  const double resolved = std::pow(1e-9 * std::abs(model.base_value) / std::abs(model.leading_coefficient),
                                   1.0 / model.order);
  return std::min(std::max(base, resolved), 0.05 * clearance);
}

std::vector<BranchSeed> seeds_from_model(const LocalBranchModel& model) {
  // c d^l must point along -f(center) so that f moves toward t f(center), t < 1.
  const double base = std::arg(-model.base_value) - std::arg(model.leading_coefficient);
  std::vector<BranchSeed> seeds;
  seeds.reserve(model.order);
  for (int k = 0; k < model.order; ++k) {
    const double angle = (base + two_pi * k) / model.order;
    seeds.push_back({model.center, std::polar(1.0, angle), k, model.order});
  }
  return seeds;
}

// Argument in [0, 2 pi); angles a rounding error below 2 pi count as 0.
double seed_angle(const BranchSeed& seed) {
  const double a = wrap_angle(std::arg(seed.direction));
  return a > two_pi - 1e-9 ? 0.0 : a;
}

class Continuation {
 public:
  Continuation(const AnalyticTarget& target, Complex anchor_value, int anchor_index, const TraceOptions& options,
               DescentPath& path)
      : target_(target),
        special_(target.special_points()),
        fb_(anchor_value),
        anchor_index_(anchor_index),
        options_(options),
        path_(path),
        scale_(target.scale()) {}

  std::optional<Complex> correct(double t, Complex guess) const {
    const Complex goal = t * fb_;
    Complex z = guess;
    for (int it = 0;; ++it) {
      const Complex fz = target_.value(z);
      const Complex residual = fz - goal;
      if (!is_finite(residual)) return std::nullopt;
      const Complex d = target_.derivative(z);
      // Near a root f(z) carries only ~eps |z| |f'(z)| absolute accuracy.
      const double floor = 16.0 * std::numeric_limits<double>::epsilon() * (std::abs(z) + scale_) * std::abs(d);
      const double tol = std::max(options_.newton_tolerance * std::max(std::abs(goal), std::abs(fz)), floor);
      if (std::abs(residual) <= tol) return z;
      if (it == options_.max_newton_iterations) return std::nullopt;
      if (d == Complex{} || !is_finite(d)) return std::nullopt;
      z -= residual / d;
    }
  }

  /// Place the first point of the branch leaving special point `index` along `seed`.
  bool seed_branch(int index, const BranchSeed& seed, const LocalBranchModel& model, double t_base) {
    const double delta = seed_offset(model, clearance_of(target_, index));
    const double t_seed = t_base * (1.0 - std::abs(model.leading_coefficient) * std::pow(delta, model.order) /
                                              std::abs(model.base_value));
    const auto z = correct(t_seed, seed.critical + delta * seed.direction);
    if (!z || !(t_seed < path_.samples.back().t)) return false;
    path_.samples.push_back({t_seed, *z});
    anchor_index_ = index;
    return true;
  }

  void run() {
    double last_dt = 0.0;
    for (int step = 0; step < options_.max_steps; ++step) {
      const auto [t, z] = path_.samples.back();

      const auto [near_index, near_dist] = target_.nearest_special(z);
      if (special_[near_index].kind == PointKind::root && near_dist < options_.snap_radius * scale_) {
        finish_at_root(near_index);
        return;
      }
      if (const int hit = critical_hit(t, z); hit >= 0) {
        if (!pass_critical(hit)) return;
        last_dt = 0.0;
        continue;
      }

      const double hmax = std::min(options_.step_cap * scale_, options_.clearance_fraction * near_dist);
      const Complex v0 = velocity(z);
      const double speed = std::abs(v0);
      if (!std::isfinite(speed) || speed == 0.0) {
        stall();
        return;
      }
      double dt = std::min(0.9 * hmax / speed, 0.5 * t);
      if (last_dt > 0.0) dt = std::min(dt, 2.0 * last_dt);

      bool accepted = false;
      bool outside = false;
      while (true) {
        const double t1 = t - dt;
        if (dt < options_.min_parameter_step * t || !(t1 < t)) break;
        if (const auto z1 = attempt(z, v0, dt, t1, hmax, outside)) {
          path_.samples.push_back({t1, *z1});
          last_dt = dt;
          accepted = true;
          break;
        }
        dt *= 0.5;
      }
      if (!accepted) {
        if (outside) throw LeftDomain("descent path left the target domain");
        // Steps shrink like the distance squared near a critical point, so the
        // floor can be reached before the hit radius.
        if (const int hit = captured_critical(); hit >= 0) {
          if (!pass_critical(hit)) return;
          last_dt = 0.0;
          continue;
        }
        stall();
        return;
      }
    }
    stall();
  }

 private:
  Complex velocity(Complex z) const { return fb_ / target_.derivative(z); }

  std::optional<Complex> attempt(Complex z, Complex v0, double dt, double t1, double hmax, bool& outside) const {
    const double h = -dt;
    const Complex k1 = v0;
    const Complex k2 = velocity(z + 0.5 * h * k1);
    const Complex k3 = velocity(z + 0.5 * h * k2);
    const Complex k4 = velocity(z + h * k3);
    const Complex predicted = z + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!is_finite(predicted)) return std::nullopt;
    const auto corrected = correct(t1, predicted);
    if (!corrected) return std::nullopt;
    if (!target_.in_domain(*corrected)) {
      outside = true;
      return std::nullopt;
    }
    outside = false;
    if (std::abs(*corrected - z) > hmax) return std::nullopt;
    const Complex v1 = velocity(*corrected);
    if (!is_finite(v1) || std::abs(std::arg(v1 / v0)) > options_.max_turn) return std::nullopt;
    return corrected;
  }

  int critical_hit(double t, Complex z) const {
    const double fb_abs = std::abs(fb_);
    for (std::size_t i = 0; i < special_.size(); ++i) {
      if (special_[i].kind != PointKind::critical || static_cast<int>(i) == anchor_index_) continue;
      if (std::abs(z - special_[i].location) >= options_.critical_hit_radius * scale_) continue;
      const Complex fc = target_.value(special_[i].location);
      if (std::abs(fc - t * fb_) < options_.critical_hit_radius * fb_abs) return static_cast<int>(i);
    }
    return -1;
  }

  /// Records arrival at a critical point; true when the path continues past it.
  bool pass_critical(int index) {
    if (arrive_at_critical(index) && options_.continue_through_critical && continue_from(index)) return true;
    path_.endpoint = {EndpointKind::critical, special_[index].location, index};
    return false;
  }

  int captured_critical() const {
    const auto [index, dist] = target_.nearest_special(path_.samples.back().z);
    if (index < 0 || index == anchor_index_ || special_[index].kind != PointKind::critical) return -1;
    return dist <= options_.stall_capture_radius * scale_ ? index : -1;
  }

  void finish_at_root(int index) {
    path_.samples.push_back({0.0, special_[index].location});
    path_.endpoint = {EndpointKind::root, special_[index].location, index};
  }

  /// Appends the critical point itself as a sample when it satisfies the path
  /// equation to sample accuracy. Returns false when the path must stop here.
  bool arrive_at_critical(int index) {
    const Complex fc = target_.value(special_[index].location);
    const double t_star = (fc / fb_).real();
    const double residual = std::abs(fc - t_star * fb_);
    const double last_t = path_.samples.back().t;
    if (t_star > 0.0 && t_star < last_t && residual <= 1e-9 * std::max(std::abs(fb_), std::abs(fc))) {
      path_.samples.push_back({t_star, special_[index].location});
      return true;
    }
    return false;
  }

  bool continue_from(int index) {
    const auto model = branch_model(target_, special_[index]);
    auto seeds = seeds_from_model(model);
    const auto chosen = std::min_element(seeds.begin(), seeds.end(), [](const BranchSeed& a, const BranchSeed& b) {
      return seed_angle(a) < seed_angle(b);
    });
    if (!seed_branch(index, *chosen, model, path_.samples.back().t)) return false;
    ++path_.continuations;
    return true;
  }

  void stall() {
    const Complex z = path_.samples.back().z;
    const auto [index, dist] = target_.nearest_special(z);
    if (index >= 0 && dist <= options_.stall_capture_radius * scale_) {
      if (special_[index].kind == PointKind::root) {
        finish_at_root(index);
        return;
      }
    }
    if (const int hit = captured_critical(); hit >= 0) {
      arrive_at_critical(hit);
      path_.endpoint = {EndpointKind::critical, special_[hit].location, hit};
      return;
    }
    path_.endpoint = {EndpointKind::unresolved, z, -1};
  }

  const AnalyticTarget& target_;
  std::span<const SpecialPoint> special_;
  Complex fb_;
  int anchor_index_;
  const TraceOptions& options_;
  DescentPath& path_;
  double scale_;
};

void finalize(DescentPath& path, const TraceOptions& options) {
  path.arc_length = arc_length(path);
  if (path.endpoint.kind == EndpointKind::unresolved && !options.allow_unresolved) {
    throw StalledCorrection("path correction stalled away from every special point");
  }
}

}  // namespace

const char* to_string(EndpointKind kind) {
  switch (kind) {
    case EndpointKind::root: return "root";
    case EndpointKind::critical: return "critical";
    case EndpointKind::unresolved: return "unresolved";
  }
  return "unknown";
}

DescentPath trace_descent(const AnalyticTarget& target, Complex beta, const TraceOptions& options) {
  if (!is_finite(beta) || !target.in_domain(beta)) throw LeftDomain("trace_descent: start point outside the domain");
  const Complex fb = target.value(beta);
  if (fb == Complex{}) throw InvalidInput("trace_descent: start point is a root");
  const int at_special = find_special(target, beta, options.critical_hit_radius * target.scale());
  if (at_special >= 0 && target.special_points()[at_special].kind == PointKind::critical) {
    throw InvalidInput("trace_descent: start point is a critical point; use trace_all_branches");
  }

  DescentPath path;
  path.anchor = beta;
  path.anchor_value = fb;
  path.samples.push_back({1.0, beta});
  Continuation(target, fb, -1, options, path).run();
  finalize(path, options);
  return path;
}

std::vector<BranchSeed> descent_directions(const AnalyticTarget& target, const SpecialPoint& critical) {
  return seeds_from_model(branch_model(target, critical));
}

std::vector<DescentPath> trace_all_branches(const AnalyticTarget& target, const SpecialPoint& critical,
                                            const TraceOptions& options) {
  const int index = find_special(target, critical.location, 1e-7 * target.scale());
  if (index < 0 || target.special_points()[index].kind != PointKind::critical) {
    throw InvalidInput("trace_all_branches: point is not a critical special point of the target");
  }
  const SpecialPoint& sp = target.special_points()[index];
  const auto model = branch_model(target, sp);
  if (model.base_value == Complex{}) throw InvalidInput("trace_all_branches: critical value is zero");

  std::vector<DescentPath> paths;
  for (const auto& seed : seeds_from_model(model)) {
    DescentPath path;
    path.anchor = sp.location;
    path.anchor_value = model.base_value;
    path.samples.push_back({1.0, sp.location});
    Continuation engine(target, model.base_value, index, options, path);
    if (!engine.seed_branch(index, seed, model, 1.0)) {
      throw StalledCorrection("trace_all_branches: seed correction failed");
    }
    engine.run();
    finalize(path, options);
    paths.push_back(std::move(path));
  }
  return paths;
}

double arc_length(std::span<const PathSample> samples) {
  double sum = 0.0;
  for (std::size_t i = 1; i < samples.size(); ++i) sum += std::abs(samples[i].z - samples[i - 1].z);
  return sum;
}

double arc_length(const DescentPath& path) { return arc_length(path.samples); }

double initial_tangent(const DescentPath& path) {
  if (path.samples.size() < 2) return 0.0;
  return std::arg(path.samples[1].z - path.samples[0].z);
}

double interior_separation(const DescentPath& a, const DescentPath& b, double exclusion) {
  struct Tagged {
    Complex z;
    int tag;
  };
  std::vector<Tagged> pts;
  auto collect = [&pts, exclusion](const DescentPath& p, int tag) {
    if (p.samples.empty()) return;
    const Complex first = p.samples.front().z, last = p.samples.back().z;
    for (const auto& s : p.samples) {
      if (std::abs(s.z - first) > exclusion && std::abs(s.z - last) > exclusion) pts.push_back({s.z, tag});
    }
  };
  collect(a, 0);
  collect(b, 1);
  std::sort(pts.begin(), pts.end(), [](const Tagged& x, const Tagged& y) { return x.z.real() < y.z.real(); });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i; j-- > 0;) {
      if (pts[i].z.real() - pts[j].z.real() >= best) break;
      if (pts[i].tag != pts[j].tag) best = std::min(best, std::abs(pts[i].z - pts[j].z));
    }
  }
  return best;
}

}  // namespace polydescent
