#include "mstp/steiner.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <unordered_map>

#include "disjoint_sets.hpp"

namespace mstp {

namespace {

constexpr double kTwoThirdsPi = 2.0 * std::numbers::pi / 3.0;
constexpr double kDistanceFloor = 1e-12;
constexpr int kWeiszfeldMaxIterations = 100000;
constexpr int kRefineMaxSweeps = 10000;
constexpr double kRefineTolerance = 1e-9;    // relative to cluster diameter
constexpr double kCollapseTolerance = 1e-12; // relative to cluster diameter
// Insertion threshold sits inside the tolerance checked at Steiner points.
constexpr double kInsertTolerance = 1e-4;

// True when the angle at `apex` between the other two points is at least 120 degrees.
bool wide_angle(Point apex, Point p, Point q) {
  const double ux = p.x - apex.x;
  const double uy = p.y - apex.y;
  const double vx = q.x - apex.x;
  const double vy = q.y - apex.y;
  const double dot = ux * vx + uy * vy;
  return dot <= -0.5 * std::hypot(ux, uy) * std::hypot(vx, vy);
}

Point weiszfeld(Point start, const std::array<Point, 3>& pts) {
  const double scale = std::max({distance(pts[0], pts[1]), distance(pts[0], pts[2]), distance(pts[1], pts[2])});
  Point x = start;
  for (int it = 0; it < kWeiszfeldMaxIterations; ++it) {
    double wsum = 0.0;
    Point next{0.0, 0.0};
    for (const Point& p : pts) {
      const double w = 1.0 / std::max(distance(x, p), kDistanceFloor);
      wsum += w;
      next.x += w * p.x;
      next.y += w * p.y;
    }
    next.x /= wsum;
    next.y /= wsum;
    const double step = distance(next, x);
    x = next;
    if (step <= 1e-15 * scale) {
      break;
    }
  }
  return x;
}

// Fermat point without the distinctness precondition; coincident inputs
// collapse onto the repeated point.
Point fermat_from(Point start, Point a, Point b, Point c) {
  if (a == b || a == c) {
    return a;
  }
  if (b == c) {
    return b;
  }
  if (wide_angle(a, b, c)) {
    return a;
  }
  if (wide_angle(b, a, c)) {
    return b;
  }
  if (wide_angle(c, a, b)) {
    return c;
  }
  return weiszfeld(start, {a, b, c});
}

Point centroid(Point a, Point b, Point c) { return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0}; }

double angle_at(Point apex, Point p, Point q) {
  const double ux = p.x - apex.x;
  const double uy = p.y - apex.y;
  const double vx = q.x - apex.x;
  const double vy = q.y - apex.y;
  const double c = (ux * vx + uy * vy) / (std::hypot(ux, uy) * std::hypot(vx, vy));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

// Mutable tree over local points used while the heuristic runs.
struct WorkTree {
  std::vector<Point> pos;
  std::vector<char> alive;
  std::vector<std::vector<std::size_t>> adj;
  std::size_t terminals = 0;

  bool is_steiner(std::size_t i) const { return i >= terminals; }

  void link(std::size_t i, std::size_t j) {
    adj[i].insert(std::lower_bound(adj[i].begin(), adj[i].end(), j), j);
    adj[j].insert(std::lower_bound(adj[j].begin(), adj[j].end(), i), i);
  }

  void unlink(std::size_t i, std::size_t j) {
    adj[i].erase(std::find(adj[i].begin(), adj[i].end(), j));
    adj[j].erase(std::find(adj[j].begin(), adj[j].end(), i));
  }

  std::size_t add_point(Point p) {
    pos.push_back(p);
    alive.push_back(1);
    adj.emplace_back();
    return pos.size() - 1;
  }

  double length() const {
    double total = 0.0;
    for (std::size_t i = 0; i < adj.size(); ++i) {
      for (const std::size_t j : adj[i]) {
        if (i < j) {
          total += distance(pos[i], pos[j]);
        }
      }
    }
    return total;
  }

  // Merges Steiner point `s` into its neighbor `t`.
  void collapse(std::size_t s, std::size_t t) {
    const std::vector<std::size_t> others = adj[s];
    for (const std::size_t u : others) {
      unlink(s, u);
      if (u != t) {
        link(t, u);
      }
    }
    alive[s] = 0;
  }
};

struct SmallestAngle {
  double angle = std::numeric_limits<double>::infinity();
  std::size_t apex = 0;
  std::size_t a = 0;
  std::size_t b = 0;
};

SmallestAngle smallest_angle(const WorkTree& t, double min_edge) {
  SmallestAngle best;
  for (std::size_t v = 0; v < t.pos.size(); ++v) {
    if (!t.alive[v]) {
      continue;
    }
    const auto& nb = t.adj[v];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (distance(t.pos[v], t.pos[nb[i]]) <= min_edge) {
        continue;
      }
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (distance(t.pos[v], t.pos[nb[j]]) <= min_edge) {
          continue;
        }
        const double ang = angle_at(t.pos[v], t.pos[nb[i]], t.pos[nb[j]]);
        // Strict comparison keeps the lowest apex (then neighbor pair) on ties.
        if (ang < best.angle) {
          best = {ang, v, nb[i], nb[j]};
        }
      }
    }
  }
  return best;
}

// Gauss-Seidel sweeps moving every degree-3 Steiner point to the Fermat point
// of its neighbors; points that land on a neighbor are merged into it.
void refine(WorkTree& t, double diameter) {
  for (int sweep = 0; sweep < kRefineMaxSweeps; ++sweep) {
    double max_move = 0.0;
    for (std::size_t s = t.terminals; s < t.pos.size(); ++s) {
      if (!t.alive[s] || t.adj[s].size() != 3) {
        continue;
      }
      const auto& nb = t.adj[s];
      const Point next = fermat_from(t.pos[s], t.pos[nb[0]], t.pos[nb[1]], t.pos[nb[2]]);
      max_move = std::max(max_move, distance(next, t.pos[s]));
      t.pos[s] = next;
    }
    bool changed = false;
    for (std::size_t s = t.terminals; s < t.pos.size(); ++s) {
      if (!t.alive[s]) {
        continue;
      }
      for (const std::size_t u : t.adj[s]) {
        if (distance(t.pos[s], t.pos[u]) <= kCollapseTolerance * diameter) {
          t.collapse(s, u);
          changed = true;
          break;
        }
      }
    }
    if (!changed && max_move < kRefineTolerance * diameter) {
      break;
    }
  }
}

// Removes Steiner points left with fewer than three neighbors (never longer).
void prune(WorkTree& t) {
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t s = t.terminals; s < t.pos.size(); ++s) {
      if (!t.alive[s] || t.adj[s].size() >= 3) {
        continue;
      }
      const std::vector<std::size_t> nb = t.adj[s];
      for (const std::size_t u : nb) {
        t.unlink(s, u);
      }
      if (nb.size() == 2) {
        t.link(nb[0], nb[1]);
      }
      t.alive[s] = 0;
      again = true;
    }
  }
}

std::vector<std::pair<std::size_t, std::size_t>> euclidean_mst(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (n < 2) {
    return edges;
  }
  std::vector<char> in_tree(n, 0);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<std::size_t> parent(n, 0);
  in_tree[0] = 1;
  for (std::size_t v = 1; v < n; ++v) {
    best[v] = distance(pts[0], pts[v]);
  }
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) {
        continue;
      }
      if (pick == n || best[v] < best[pick] ||
          (best[v] == best[pick] &&
           std::minmax(parent[v], v) < std::minmax(parent[pick], pick))) {
        pick = v;
      }
    }
    in_tree[pick] = 1;
    edges.emplace_back(std::min(parent[pick], pick), std::max(parent[pick], pick));
    for (std::size_t v = 0; v < n; ++v) {
      if (in_tree[v]) {
        continue;
      }
      const double d = distance(pts[pick], pts[v]);
      if (d < best[v] || (d == best[v] && std::minmax(pick, v) < std::minmax(parent[v], v))) {
        best[v] = d;
        parent[v] = pick;
      }
    }
  }
  return edges;
}

} // namespace

Point fermat_point(Point p1, Point p2, Point p3) {
  if (p1 == p2 || p1 == p3 || p2 == p3) {
    throw InvalidInput("fermat_point: input points must be distinct");
  }
  return fermat_from(centroid(p1, p2, p3), p1, p2, p3);
}

double LocalSteinerTree::length() const {
  double total = 0.0;
  for (const auto& [i, j] : edges) {
    total += distance(points[i], points[j]);
  }
  return total;
}

LocalSteinerTree steiner_tree_cluster(std::span<const Node> terminals) {
  if (terminals.empty()) {
    throw InvalidInput("steiner_tree_cluster: no terminals");
  }
  LocalSteinerTree out;
  out.terminal_count = terminals.size();
  for (const Node& n : terminals) {
    out.points.push_back(n.xy());
  }
  out.edges = euclidean_mst(out.points);
  out.mst_length = out.length();

  double diameter = 0.0;
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    for (std::size_t j = i + 1; j < out.points.size(); ++j) {
      diameter = std::max(diameter, distance(out.points[i], out.points[j]));
    }
  }
  if (terminals.size() <= 2 || diameter == 0.0) {
    return out;
  }

  WorkTree t;
  t.terminals = terminals.size();
  for (const Point& p : out.points) {
    t.add_point(p);
  }
  for (const auto& [i, j] : out.edges) {
    t.link(i, j);
  }

  const double min_edge = kCollapseTolerance * diameter;
  const std::size_t max_steps = 10 * terminals.size();
  for (std::size_t step = 0; step < max_steps; ++step) {
    const SmallestAngle worst = smallest_angle(t, min_edge);
    if (worst.angle >= kTwoThirdsPi - kInsertTolerance) {
      break;
    }
    const WorkTree snapshot = t;
    const double before = t.length();

    const Point v = t.pos[worst.apex];
    const Point a = t.pos[worst.a];
    const Point b = t.pos[worst.b];
    const Point f = fermat_from(centroid(v, a, b), v, a, b);
    if (f == v) {
      break;
    }
    if (f == a) {
      // Obtuse at a: reattach b to a instead of adding a point.
      t.unlink(worst.apex, worst.b);
      t.link(worst.a, worst.b);
    } else if (f == b) {
      t.unlink(worst.apex, worst.a);
      t.link(worst.b, worst.a);
    } else {
      const std::size_t s = t.add_point(f);
      t.unlink(worst.apex, worst.a);
      t.unlink(worst.apex, worst.b);
      t.link(s, worst.apex);
      t.link(s, worst.a);
      t.link(s, worst.b);
    }
    refine(t, diameter);
    prune(t);

    if (t.length() > before) {
      t = snapshot;
      break;
    }
  }

  // Compact: terminals keep their indices, live Steiner points follow in creation order.
  std::vector<std::size_t> remap(t.pos.size(), 0);
  out.points.resize(t.terminals);
  for (std::size_t i = 0; i < t.pos.size(); ++i) {
    if (i < t.terminals) {
      remap[i] = i;
    } else if (t.alive[i]) {
      remap[i] = out.points.size();
      out.points.push_back(t.pos[i]);
    }
  }
  out.edges.clear();
  for (std::size_t i = 0; i < t.pos.size(); ++i) {
    if (!t.alive[i]) {
      continue;
    }
    for (const std::size_t j : t.adj[i]) {
      if (i < j) {
        out.edges.emplace_back(std::min(remap[i], remap[j]), std::max(remap[i], remap[j]));
      }
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

StationFields derive_steiner_node_fields(Point position, std::span<const Node> terminals) {
  if (terminals.empty()) {
    throw InvalidInput("derive_steiner_node_fields: no terminals");
  }
  constexpr double kFloor = 1e-9;
  double wsum = 0.0;
  StationFields f;
  for (const Node& n : terminals) {
    const double d = distance(position, n.xy());
    if (d <= kFloor) {
      return {n.z, n.s};
    }
    const double w = 1.0 / std::max(d, kFloor);
    wsum += w;
    f.z += w * n.z;
    f.s += w * n.s;
  }
  f.z /= wsum;
  f.s /= wsum;
  return f;
}

SteinerSolution steinerize(const Network& net, const EdgeSet& tree, const Partition& partition) {
  const std::vector<NodeId> terminals = net.ids(NodeKind::Terminal);
  if (terminals.size() != net.size()) {
    throw InvalidInput("steinerize: input network already contains Steiner nodes");
  }
  validate_partition(partition, terminals);
  if (!is_spanning_tree(net, tree)) {
    throw InvalidInput("steinerize: edge set is not a spanning tree of the network");
  }

  std::unordered_map<NodeId, std::size_t> cluster_of;
  for (std::size_t c = 0; c < partition.clusters.size(); ++c) {
    for (const NodeId id : partition.clusters[c]) {
      cluster_of[id] = c;
    }
  }

  // Groups: connected pieces of each cluster under intra-cluster tree edges.
  detail::DisjointSets pieces(net.size());
  for (const EdgeId& e : tree) {
    if (cluster_of.at(e.a) == cluster_of.at(e.b)) {
      pieces.unite(net.index_of(e.a), net.index_of(e.b));
    }
  }
  std::map<std::pair<std::size_t, NodeId>, std::vector<NodeId>> groups; // (cluster, smallest id) -> members
  {
    std::unordered_map<std::size_t, std::vector<NodeId>> by_root;
    for (const NodeId id : terminals) {
      by_root[pieces.find(net.index_of(id))].push_back(id);
    }
    for (auto& [root, members] : by_root) {
      std::sort(members.begin(), members.end());
      groups[{cluster_of.at(members.front()), members.front()}] = std::move(members);
    }
  }

  std::vector<Node> nodes = net.nodes();
  std::vector<EdgeId> new_edges;
  SteinerSolution sol;
  NodeId next_id = net.max_id() + 1;

  std::vector<char> solved(net.size(), 0);
  for (const auto& [key, members] : groups) {
    if (members.size() < 3) {
      continue;
    }
    std::vector<Node> local;
    for (const NodeId id : members) {
      local.push_back(net.node(id));
      solved[net.index_of(id)] = 1;
    }
    const LocalSteinerTree lt = steiner_tree_cluster(local);

    SteinerPart part;
    part.cluster = key.first;
    part.terminals = members;
    part.mst_length = lt.mst_length;
    part.steiner_length = lt.length();

    std::vector<NodeId> ids;
    for (const NodeId id : members) {
      ids.push_back(id);
    }
    for (std::size_t k = lt.terminal_count; k < lt.points.size(); ++k) {
      const StationFields f = derive_steiner_node_fields(lt.points[k], local);
      Node sn;
      sn.id = next_id++;
      sn.x = lt.points[k].x;
      sn.y = lt.points[k].y;
      sn.z = f.z;
      sn.s = f.s;
      sn.kind = NodeKind::Steiner;
      nodes.push_back(sn);
      ids.push_back(sn.id);
      sol.provenance[sn.id] = key.first;
    }
    for (const auto& [i, j] : lt.edges) {
      new_edges.push_back(EdgeId::of(ids[i], ids[j]));
    }
    for (const EdgeId& e : tree) {
      if (cluster_of.at(e.a) == key.first && cluster_of.at(e.b) == key.first &&
          pieces.find(net.index_of(e.a)) == pieces.find(net.index_of(members.front()))) {
        part.replaced_length += net.attr(e).length;
      }
    }
    sol.parts.push_back(std::move(part));
  }

  for (const EdgeId& e : tree) {
    const bool intra = cluster_of.at(e.a) == cluster_of.at(e.b);
    if (intra && solved[net.index_of(e.a)]) {
      continue;
    }
    sol.tree.push_back(e);
  }
  sol.tree.insert(sol.tree.end(), new_edges.begin(), new_edges.end());
  std::sort(sol.tree.begin(), sol.tree.end());

  std::vector<EdgeId> candidates;
  candidates.reserve(net.edges().size() + sol.tree.size());
  for (const Edge& e : net.edges()) {
    candidates.push_back(e.id);
  }
  candidates.insert(candidates.end(), sol.tree.begin(), sol.tree.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  sol.network = Network(std::move(nodes), std::move(candidates), net.coefficients());
  return sol;
}

} // namespace mstp
