#include "polydescent/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "polydescent/errors.hpp"

namespace polydescent {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

int DescentTree::root_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](const TreeVertex& v) { return v.kind == PointKind::root; }));
}

int DescentTree::critical_count() const { return static_cast<int>(vertices.size()) - root_count(); }

int DescentTree::expected_edge_count() const {
  int e = 0;
  for (const auto& v : vertices) {
    if (v.kind == PointKind::critical) e += v.multiplicity + 1;
  }
  return e;
}

int DescentTree::vertex_at(Complex z, double tol) const {
  int best = -1;
  double best_d = tol;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const double d = std::abs(vertices[i].location - z);
    if (d <= best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

DescentTree build_descent_tree(const AnalyticTarget& target, const TraceOptions& options) {
  const auto special = target.special_points();
  DescentTree tree;
  tree.scale = target.scale();

  std::vector<int> order(special.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&special](int a, int b) {
    const Complex x = special[a].location, y = special[b].location;
    return x.real() < y.real() || (x.real() == y.real() && x.imag() < y.imag());
  });
  int nroot = 0, ncrit = 0;
  for (const int i : order) {
    const auto& sp = special[i];
    const bool root = sp.kind == PointKind::root;
    tree.vertices.push_back({sp.location, sp.kind, sp.multiplicity,
                             (root ? "r" : "c") + std::to_string(root ? nroot++ : ncrit++)});
  }
  if (ncrit == 0) throw InvalidInput("build_descent_tree: target has no critical points");

  TraceOptions opts = options;
  opts.allow_unresolved = true;
  const double match_tol = 1e-8 * tree.scale;
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    const auto& vert = tree.vertices[v];
    if (vert.kind != PointKind::critical) continue;
    auto paths = trace_all_branches(target, {vert.location, vert.kind, vert.multiplicity}, opts);
    for (std::size_t b = 0; b < paths.size(); ++b) {
      auto& p = paths[b];
      if (p.endpoint.kind == EndpointKind::unresolved) {
        throw UnresolvedEdge("branch " + std::to_string(b) + " from " + vert.label + " did not reach a special point");
      }
      const int to = tree.vertex_at(p.endpoint.location, match_tol);
      if (to < 0) throw UnresolvedEdge("branch endpoint does not match any vertex");
      tree.edges.push_back({static_cast<int>(v), to, static_cast<int>(b), std::move(p)});
    }
  }
  return tree;
}

TreeReport verify_tree(const DescentTree& tree) {
  TreeReport rep;
  rep.vertex_count = static_cast<int>(tree.vertices.size());
  rep.edge_count = static_cast<int>(tree.edges.size());
  rep.expected_edges = rep.vertex_count - 1;
  rep.edge_count_ok = rep.edge_count == rep.expected_edges && rep.edge_count == tree.expected_edge_count();

  UnionFind uf(rep.vertex_count);
  rep.acyclic = true;
  for (const auto& e : tree.edges) {
    if (e.from < 0 || e.to < 0 || e.from >= rep.vertex_count || e.to >= rep.vertex_count || !uf.unite(e.from, e.to)) {
      rep.acyclic = false;
    }
  }
  std::set<int> comps;
  for (int v = 0; v < rep.vertex_count; ++v) comps.insert(uf.find(v));
  rep.components = static_cast<int>(comps.size());
  rep.connected = rep.components == 1;

  rep.distinct_branch_targets = true;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < tree.edges.size(); ++j) {
      if (tree.edges[i].from == tree.edges[j].from && tree.edges[i].to == tree.edges[j].to) {
        rep.distinct_branch_targets = false;
      }
    }
  }

  double min_d = std::numeric_limits<double>::infinity();
  const double exclusion = kEndpointExclusion * tree.scale;
  for (std::size_t i = 0; i < tree.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < tree.edges.size(); ++j) {
      min_d = std::min(min_d, interior_separation(tree.edges[i].path, tree.edges[j].path, exclusion));
    }
  }
  rep.min_interior_distance = min_d;
  rep.disjoint = min_d > kDisjointThreshold * tree.scale;
  return rep;
}

TreeRoute tree_route(const DescentTree& tree, int from, int to) {
  const int nv = static_cast<int>(tree.vertices.size());
  if (from < 0 || to < 0 || from >= nv || to >= nv) throw RouteError("tree_route: vertex not in tree");
  if (from == to) throw RouteError("tree_route: end points coincide");

  // Breadth-first search over the undirected edge set.
  std::vector<std::vector<std::pair<int, int>>> adj(nv);
  for (std::size_t e = 0; e < tree.edges.size(); ++e) {
    adj[tree.edges[e].from].push_back({tree.edges[e].to, static_cast<int>(e)});
    adj[tree.edges[e].to].push_back({tree.edges[e].from, static_cast<int>(e)});
  }
  std::vector<int> via(nv, -1), prev(nv, -1);
  std::vector<bool> seen(nv, false);
  std::queue<int> q;
  q.push(from);
  seen[from] = true;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (const auto& [w, e] : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        prev[w] = v;
        via[w] = e;
        q.push(w);
      }
    }
  }
  if (!seen[to]) throw RouteError("tree_route: vertices are not connected");

  std::vector<int> vpath{to};
  std::vector<int> epath;
  for (int v = to; v != from; v = prev[v]) {
    epath.push_back(via[v]);
    vpath.push_back(prev[v]);
  }
  std::reverse(vpath.begin(), vpath.end());
  std::reverse(epath.begin(), epath.end());

  TreeRoute route;
  route.vertex_path = vpath;
  for (const int v : vpath) {
    if (tree.vertices[v].kind == PointKind::critical) route.critical_vertices.push_back(v);
  }
  for (std::size_t k = 0; k < epath.size(); ++k) {
    const auto& edge = tree.edges[epath[k]];
    const double fa = std::abs(edge.path.anchor_value);
    std::vector<PathSample> samples = edge.path.samples;
    // Edges run critical -> endpoint; walk them backwards when needed.
    if (edge.from != vpath[k]) std::reverse(samples.begin(), samples.end());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (k > 0 && i == 0) continue;  // shared vertex
      route.points.push_back(samples[i].z);
      route.modulus.push_back(samples[i].t * fa);
    }
  }
  for (std::size_t i = 1; i < route.points.size(); ++i) route.length += std::abs(route.points[i] - route.points[i - 1]);
  const auto peak = std::max_element(route.modulus.begin(), route.modulus.end());
  route.peak_modulus = *peak;
  route.peak_location = route.points[static_cast<std::size_t>(peak - route.modulus.begin())];
  return route;
}

}  // namespace polydescent
