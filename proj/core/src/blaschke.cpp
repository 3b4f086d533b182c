#include "polydescent/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "polydescent/coefficients.hpp"
#include "polydescent/errors.hpp"

namespace polydescent {

namespace {

constexpr double kSeparation = 1e-9;

Complex factor(Complex z, Complex a) {
  const Complex den = 1.0 - std::conj(a) * z;
  if (std::abs(den) <= 1e-15) throw DomainError("Blaschke factor evaluated at its pole");
  return (z - a) / den;
}

Complex numerator_value(const BlaschkeProduct& b, Complex z) {
  const auto zeros = b.zeros();
  Complex sum{};
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    const Complex a = zeros[j].location;
    Complex term{zeros[j].multiplicity * (1.0 - std::norm(a)), 0.0};
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      if (k == j) continue;
      const Complex ak = zeros[k].location;
      term *= (z - ak) * (1.0 - std::conj(ak) * z);
    }
    sum += term;
  }
  return sum;
}

}  // namespace

BlaschkeProduct make_blaschke(std::vector<Root> zeros) {
  if (zeros.size() < 2) throw InvalidInput("Blaschke product needs at least two distinct zeros");
  bool has_origin = false;
  for (const auto& z : zeros) {
    if (!is_finite(z.location)) throw InvalidInput("Blaschke zero is not finite");
    if (z.multiplicity < 1) throw InvalidInput("Blaschke zero multiplicity must be positive");
    if (!(std::abs(z.location) < 1.0)) throw InvalidInput("Blaschke zeros must lie in the open unit disk");
    if (z.location == Complex{}) has_origin = true;
  }
  if (!has_origin) throw InvalidInput("normalized Blaschke product needs a zero at 0");
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    for (std::size_t j = i + 1; j < zeros.size(); ++j) {
      if (std::abs(zeros[i].location - zeros[j].location) <= kSeparation) {
        throw InvalidInput("Blaschke zeros " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
  BlaschkeProduct b;
  Complex at_one{1.0, 0.0};
  for (const auto& z : zeros) {
    at_one *= ipow((1.0 - z.location) / (1.0 - std::conj(z.location)), z.multiplicity);
    b.degree_ += z.multiplicity;
  }
  b.constant_ = 1.0 / at_one;
  b.constant_ /= std::abs(b.constant_);
  b.zeros_ = std::move(zeros);
  return b;
}

Complex blaschke_eval(const BlaschkeProduct& b, Complex z) {
  Complex acc = b.constant();
  for (const auto& r : b.zeros()) acc *= ipow(factor(z, r.location), r.multiplicity);
  return acc;
}

Complex blaschke_log_derivative(const BlaschkeProduct& b, Complex z) {
  Complex sum{};
  for (const auto& r : b.zeros()) {
    const Complex a = r.location;
    const Complex d = z - a;
    const Complex den = 1.0 - std::conj(a) * z;
    if (std::abs(d) <= kSeparation) throw DomainError("Blaschke log-derivative evaluated at a zero");
    if (std::abs(den) <= 1e-15) throw DomainError("Blaschke log-derivative evaluated at a pole");
    sum += r.multiplicity * (1.0 - std::norm(a)) / (d * den);
  }
  return sum;
}

Complex blaschke_derivative(const BlaschkeProduct& b, Complex z) {
  const auto zeros = b.zeros();
  double nearest = std::numeric_limits<double>::infinity();
  for (const auto& r : zeros) nearest = std::min(nearest, std::abs(z - r.location));
  if (nearest > 1e-6) return blaschke_eval(b, z) * blaschke_log_derivative(b, z);
  Complex sum{};
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    const Complex a = zeros[j].location;
    const Complex den = 1.0 - std::conj(a) * z;
    Complex term = static_cast<double>(zeros[j].multiplicity) * ipow(factor(z, a), zeros[j].multiplicity - 1) * (1.0 - std::norm(a)) /
                   (den * den);
    for (std::size_t k = 0; k < zeros.size(); ++k) {
      if (k != j) term *= ipow(factor(z, zeros[k].location), zeros[k].multiplicity);
    }
    sum += term;
  }
  return b.constant() * sum;
}

CriticalPointSet blaschke_critical_points(const BlaschkeProduct& b) {
  const auto zeros = b.zeros();
  const std::size_t s = zeros.size();
  Coefficients numerator{Complex{}};
  for (std::size_t j = 0; j < s; ++j) {
    Coefficients part{Complex{zeros[j].multiplicity * (1.0 - std::norm(zeros[j].location)), 0.0}};
    for (std::size_t k = 0; k < s; ++k) {
      if (k == j) continue;
      const Complex a = zeros[k].location;
      const Complex quad[] = {-a, 1.0 + std::norm(a), -std::conj(a)};
      part = multiply(part, quad);
    }
    if (part.size() > numerator.size()) numerator.resize(part.size(), Complex{});
    for (std::size_t i = 0; i < part.size(); ++i) numerator[i] += part[i];
  }
  numerator = trim(std::move(numerator), 1e-15);

  std::vector<Complex> roots = aberth_roots(numerator);
  const Coefficients dnum = derivative(numerator);
  for (auto& z : roots) {
    Complex value = numerator_value(b, z);
    for (int it = 0; it < 5 && value != Complex{}; ++it) {
      const Complex dv = horner(dnum, z);
      if (dv == Complex{}) break;
      const Complex cand = z - value / dv;
      const Complex cand_value = numerator_value(b, cand);
      if (!(std::abs(cand_value) < std::abs(value))) break;
      z = cand;
      value = cand_value;
    }
  }
  std::vector<Complex> inside;
  for (const auto& z : roots) {
    if (std::abs(z) < 1.0) inside.push_back(z);
  }

  const double radius = 1e-7;
  CriticalPointSet out;
  std::vector<bool> used(inside.size(), false);
  for (std::size_t i = 0; i < inside.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> members{i};
    used[i] = true;
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (std::size_t k = 0; k < inside.size(); ++k) {
        if (!used[k] && std::abs(inside[members[m]] - inside[k]) <= radius) {
          used[k] = true;
          members.push_back(k);
        }
      }
    }
    Complex sum{};
    for (const auto k : members) sum += inside[k];
    out.points.push_back({sum / static_cast<double>(members.size()), static_cast<int>(members.size())});
  }
  if (out.total_multiplicity() != static_cast<int>(s) - 1) {
    throw CriticalPointError("blaschke_critical_points: in-disk multiplicities sum to " +
                             std::to_string(out.total_multiplicity()) + ", expected " + std::to_string(s - 1));
  }
  std::sort(out.points.begin(), out.points.end(), [](const CriticalPoint& x, const CriticalPoint& y) {
    return x.location.real() < y.location.real() ||
           (x.location.real() == y.location.real() && x.location.imag() < y.location.imag());
  });
  return out;
}

BlaschkeTarget::BlaschkeTarget(BlaschkeProduct b) : b_(std::move(b)), critical_(blaschke_critical_points(b_)) {
  for (const auto& z : b_.zeros()) special_.push_back({z.location, PointKind::root, z.multiplicity});
  for (const auto& c : critical_.points) special_.push_back({c.location, PointKind::critical, c.multiplicity});
}

BlaschkeReport blaschke_tree_and_bounds(const BlaschkeProduct& b, int n_theta) {
  BlaschkeReport rep;
  const BlaschkeTarget target(b);
  rep.s = static_cast<int>(b.distinct_count());
  rep.n = b.degree();
  rep.p = static_cast<int>(target.critical().points.size());
  rep.critical_multiplicity = target.critical().total_multiplicity();
  rep.multiplicity_ok = rep.critical_multiplicity == rep.s - 1;
  rep.length_bound = two_pi * rep.n;

  rep.tree = build_descent_tree(target);
  rep.tree_report = verify_tree(rep.tree);
  rep.inside_disk = rep.lengths_ok = rep.crossings_ok = rep.crofton_ok = true;
  for (const auto& e : rep.tree.edges) {
    BlaschkeEdgeReport er;
    er.from = e.from;
    er.to = e.to;
    er.arc_length = e.path.arc_length;
    er.crofton_length = crofton_length(e.path, n_theta).length;
    for (const auto& s : e.path.samples) er.max_abs_z = std::max(er.max_abs_z, std::abs(s.z));
    er.max_crossings = max_crossings(e.path, std::max(4, n_theta / 4), 256).max_count;
    rep.inside_disk = rep.inside_disk && er.max_abs_z < 1.0;
    rep.lengths_ok = rep.lengths_ok && er.arc_length <= rep.length_bound * (1.0 + 1e-3);
    rep.crossings_ok = rep.crossings_ok && er.max_crossings <= 2 * rep.n;
    rep.crofton_ok = rep.crofton_ok && std::abs(er.crofton_length - er.arc_length) <= 5e-3 * er.arc_length;
    rep.edges.push_back(er);
  }
  return rep;
}

}  // namespace polydescent
