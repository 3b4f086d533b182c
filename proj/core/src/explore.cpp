#include "polydescent/explore.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "polydescent/crofton.hpp"
#include "polydescent/errors.hpp"
#include "polydescent/geometry.hpp"
#include "polydescent/random.hpp"
#include "polydescent/tree.hpp"

namespace polydescent {

namespace {

std::vector<Complex> sample_separated(CounterRng& rng, int count, double radius, double min_sep,
                                      std::vector<Complex> points = {}) {
  int attempts = 0;
  while (static_cast<int>(points.size()) < count) {
    if (++attempts > 100000) throw InvalidInput("cannot place separated points");
    const double rho = radius * std::sqrt(rng.uniform());
    const double phi = two_pi * rng.uniform();
    const Complex z = std::polar(rho, phi);
    bool ok = true;
    for (Complex w : points) ok = ok && std::abs(z - w) >= min_sep;
    if (ok) points.push_back(z);
  }
  return points;
}

void cap_degree(std::vector<Root>& roots, const std::vector<bool>& boundary, int max_degree) {
  auto total = [&] {
    int n = 0;
    for (const auto& r : roots) n += r.multiplicity;
    return n;
  };
  while (total() > max_degree) {
    // Lower boundary multiplicities first so the interior bias survives the cap.
    int pick = -1;
    for (int pass = 0; pass < 2 && pick < 0; ++pass) {
      for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].multiplicity <= 1 || (pass == 0 && !boundary[i])) continue;
        if (pick < 0 || roots[i].multiplicity > roots[pick].multiplicity) pick = static_cast<int>(i);
      }
    }
    if (pick < 0) throw InvalidInput("degree cap below the number of distinct roots");
    --roots[pick].multiplicity;
  }
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

const char* to_string(InstanceKind kind) { return kind == InstanceKind::polynomial ? "polynomial" : "blaschke"; }

FactoredPolynomial generate_polynomial(const InstanceSpec& spec, std::uint64_t index) {
  if (spec.min_distinct < 2 || spec.max_distinct < spec.min_distinct || spec.max_multiplicity < 1) {
    throw InvalidInput("bad instance spec");
  }
  CounterRng rng(derive_seed(spec.seed, index));
  const int s = rng.uniform_int(spec.min_distinct, spec.max_distinct);
  const auto points = sample_separated(rng, s, spec.region_radius, spec.min_separation);
  const auto hull = convex_hull(points);
  std::vector<bool> boundary(points.size());
  std::vector<Root> roots;
  for (std::size_t i = 0; i < points.size(); ++i) {
    boundary[i] = hull_membership(hull, points[i]) != HullRegion::interior;
    int mult;
    if (spec.interior_bias && !boundary[i]) {
      mult = rng.uniform() < 0.6 ? spec.max_multiplicity : rng.uniform_int(1, spec.max_multiplicity);
    } else {
      mult = rng.uniform_int(1, spec.max_multiplicity);
    }
    roots.push_back({points[i], mult});
  }
  cap_degree(roots, boundary, spec.max_degree);
  return FactoredPolynomial(std::move(roots));
}

BlaschkeProduct generate_blaschke(const InstanceSpec& spec, std::uint64_t index) {
  CounterRng rng(derive_seed(spec.seed, index));
  const int s = rng.uniform_int(std::max(2, spec.min_distinct), std::max(2, std::min(spec.max_distinct, 5)));
  const double radius = std::min(spec.region_radius, 0.8);
  const auto points = sample_separated(rng, s, radius, spec.min_separation, {Complex{0.0, 0.0}});
  std::vector<Root> zeros;
  const int cap = std::min(spec.max_multiplicity, 3);
  for (Complex z : points) zeros.push_back({z, rng.uniform_int(1, std::max(1, cap))});
  return make_blaschke(std::move(zeros));
}

ExplorationRow explore_polynomial(const FactoredPolynomial& poly, std::uint64_t index, std::uint64_t seed) {
  ExplorationRow row;
  row.index = index;
  row.seed = seed;
  row.kind = InstanceKind::polynomial;
  row.N = poly.degree();
  row.s = static_cast<int>(poly.distinct_count());
  row.R = poly.scale();
  const auto locations = poly.locations();
  const auto hull = convex_hull(locations);
  row.all_roots_boundary = std::all_of(locations.begin(), locations.end(),
                                       [&](Complex z) { return hull_membership(hull, z) != HullRegion::interior; });
  try {
    PolynomialTarget target(poly);
    row.p = static_cast<int>(target.critical().points.size());
    const auto tree = build_descent_tree(target);
    row.edges = static_cast<int>(tree.edges.size());
    row.tree_ok = verify_tree(tree).passed();
    const double degree_bound = pi * row.N * row.R;
    const double distinct_bound = two_pi * row.s * row.R;
    for (const auto& e : tree.edges) {
      const double len = e.path.arc_length;
      const bool on_boundary = e.path.endpoint.kind == EndpointKind::root &&
                               hull_membership(hull, e.path.endpoint.location) != HullRegion::interior;
      double& slot = on_boundary ? row.max_boundary_ratio : row.max_interior_ratio;
      slot = std::max(slot, len / distinct_bound);
      if (len > row.max_edge_length) {
        row.max_edge_length = len;
        row.max_edge_boundary = on_boundary;
      }
    }
    row.ratio_degree = row.max_edge_length / degree_bound;
    row.ratio_distinct = row.max_edge_length / distinct_bound;
    if (!row.tree_ok) {
      row.failed = true;
      row.failure = "tree check";
    }
  } catch (const std::exception& e) {
    row.failed = true;
    row.failure = e.what();
  }
  return row;
}

ExplorationRow explore_blaschke(const BlaschkeProduct& b, std::uint64_t index, std::uint64_t seed) {
  ExplorationRow row;
  row.index = index;
  row.seed = seed;
  row.kind = InstanceKind::blaschke;
  row.N = b.degree();
  row.s = static_cast<int>(b.distinct_count());
  row.R = 1.0;
  try {
    const auto report = blaschke_tree_and_bounds(b);
    row.p = report.p;
    row.edges = static_cast<int>(report.tree.edges.size());
    row.tree_ok = report.passed();
    for (const auto& e : report.edges) {
      row.max_edge_length = std::max(row.max_edge_length, e.arc_length);
      row.max_interior_ratio = std::max(row.max_interior_ratio, e.arc_length / (two_pi * row.s));
    }
    row.ratio_degree = row.max_edge_length / (two_pi * row.N);
    row.ratio_distinct = row.max_edge_length / (two_pi * row.s);
    if (!row.tree_ok) {
      row.failed = true;
      row.failure = "blaschke check";
    }
  } catch (const std::exception& e) {
    row.failed = true;
    row.failure = e.what();
  }
  return row;
}

int thread_budget() {
  if (const char* env = std::getenv("POLYDESCENT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
  const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(threads > 0 ? threads : 1, 1, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

std::vector<ExplorationRow> explore_lengths(const InstanceSpec& spec, int count, int threads) {
  if (count < 1) throw InvalidInput("instance count must be at least 1");
  if (threads <= 0) threads = thread_budget();
  std::vector<ExplorationRow> rows(static_cast<std::size_t>(count));
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    const std::uint64_t seed = derive_seed(spec.seed, i);
    try {
      rows[i] = spec.kind == InstanceKind::polynomial ? explore_polynomial(generate_polynomial(spec, i), i, seed)
                                                      : explore_blaschke(generate_blaschke(spec, i), i, seed);
    } catch (const std::exception& e) {
      rows[i].index = i;
      rows[i].seed = seed;
      rows[i].kind = spec.kind;
      rows[i].failed = true;
      rows[i].failure = std::string("generation: ") + e.what();
    }
  });
  return rows;
}

std::string exploration_csv(const std::vector<ExplorationRow>& rows) {
  std::ostringstream out;
  out << "# " << kExplorationCsvVersion << "\n";
  out << "index,seed,kind,N,s,p,R,edges,max_edge_length,ratio_piNR,ratio_2pisR,max_edge_boundary,"
         "max_boundary_ratio,max_interior_ratio,all_roots_boundary,tree_ok,failed,failure\n";
  for (const auto& r : rows) {
    std::string failure = r.failure;
    std::replace(failure.begin(), failure.end(), ',', ';');
    std::replace(failure.begin(), failure.end(), '\n', ' ');
    out << r.index << ',' << r.seed << ',' << to_string(r.kind) << ',' << r.N << ',' << r.s << ',' << r.p << ','
        << num(r.R) << ',' << r.edges << ',' << num(r.max_edge_length) << ',' << num(r.ratio_degree) << ','
        << num(r.ratio_distinct) << ',' << int(r.max_edge_boundary) << ',' << num(r.max_boundary_ratio) << ','
        << num(r.max_interior_ratio) << ',' << int(r.all_roots_boundary) << ',' << int(r.tree_ok) << ','
        << int(r.failed) << ',' << failure << '\n';
  }
  return out.str();
}

nlohmann::json exploration_summary(const std::vector<ExplorationRow>& rows) {
  double max_degree = 0, max_distinct = 0, max_boundary = -1, max_interior = -1;
  int failures = 0;
  std::vector<std::uint64_t> failed;
  for (const auto& r : rows) {
    if (r.failed) {
      ++failures;
      failed.push_back(r.index);
      continue;
    }
    max_degree = std::max(max_degree, r.ratio_degree);
    max_distinct = std::max(max_distinct, r.ratio_distinct);
    max_boundary = std::max(max_boundary, r.max_boundary_ratio);
    max_interior = std::max(max_interior, r.max_interior_ratio);
  }
  return {{"version", kExplorationCsvVersion},
          {"instances", rows.size()},
          {"failures", failures},
          {"failed_indices", failed},
          {"max_ratio_piNR", max_degree},
          {"max_ratio_2pisR", max_distinct},
          {"max_ratio_2pisR_boundary_endpoint", max_boundary},
          {"max_ratio_2pisR_interior_endpoint", max_interior},
          {"degree_bound_holds", max_degree <= 1.0 + 1e-3},
          {"boundary_bound_holds", max_boundary <= 1.0 + 1e-3}};
}

}  // namespace polydescent
