#include "mstp/spanning.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <tuple>

#include "disjoint_sets.hpp"

namespace mstp {

namespace {

// (key, min endpoint id, max endpoint id): the total order every greedy step uses.
using RankedEdge = std::tuple<double, NodeId, NodeId, std::size_t>;

[[noreturn]] void throw_disconnected(const Network& net) {
  auto components = connected_components(net);
  std::ostringstream msg;
  msg << "candidate edges leave the network disconnected (" << components.size() << " components:";
  for (const auto& comp : components) {
    msg << " {";
    for (std::size_t i = 0; i < comp.size(); ++i) {
      msg << (i ? "," : "") << comp[i];
    }
    msg << "}";
  }
  msg << ")";
  throw Infeasible(msg.str(), std::move(components));
}

std::vector<std::vector<std::size_t>> incidence(const Network& net) {
  std::vector<std::vector<std::size_t>> adj(net.size());
  const auto& edges = net.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    adj[net.index_of(edges[e].id.a)].push_back(e);
    adj[net.index_of(edges[e].id.b)].push_back(e);
  }
  return adj;
}

// Grows Prim trees from `roots` simultaneously (one frontier heap), then joins
// the resulting forest with the cheapest remaining edges in Kruskal order.
EdgeSet grow(const Network& net, const std::vector<double>& key, const std::vector<std::size_t>& roots) {
  const std::size_t n = net.size();
  if (n == 0) {
    return {};
  }
  const auto& edges = net.edges();
  const auto adj = incidence(net);

  std::vector<char> visited(n, 0);
  std::priority_queue<RankedEdge, std::vector<RankedEdge>, std::greater<>> frontier;
  auto visit = [&](std::size_t v) {
    visited[v] = 1;
    for (const std::size_t e : adj[v]) {
      const Edge& edge = edges[e];
      const std::size_t other = net.index_of(edge.id.a) == v ? net.index_of(edge.id.b) : net.index_of(edge.id.a);
      if (!visited[other]) {
        frontier.emplace(key[e], edge.id.a, edge.id.b, e);
      }
    }
  };

  EdgeSet tree;
  tree.reserve(n - 1);
  detail::DisjointSets sets(n);
  for (const std::size_t r : roots) {
    visit(r);
  }
  while (!frontier.empty()) {
    const auto [k, a, b, e] = frontier.top();
    frontier.pop();
    const std::size_t ia = net.index_of(a);
    const std::size_t ib = net.index_of(b);
    if (visited[ia] && visited[ib]) {
      continue;
    }
    tree.push_back(edges[e].id);
    sets.unite(ia, ib);
    visit(visited[ia] ? ib : ia);
  }

  if (tree.size() + 1 < n) {
    std::vector<RankedEdge> rest;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      rest.emplace_back(key[e], edges[e].id.a, edges[e].id.b, e);
    }
    std::sort(rest.begin(), rest.end());
    for (const auto& [k, a, b, e] : rest) {
      if (sets.unite(net.index_of(a), net.index_of(b))) {
        tree.push_back(edges[e].id);
      }
    }
  }
  if (tree.size() + 1 != n) {
    throw_disconnected(net);
  }
  return tree;
}

std::size_t lowest_id_index(const Network& net) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < net.size(); ++i) {
    if (net.nodes()[i].id < net.nodes()[best].id) {
      best = i;
    }
  }
  return best;
}

// Farthest-point traversal seeded at the lowest id; ties go to the lower id.
std::vector<std::size_t> spread_roots(const Network& net, std::size_t count) {
  const auto& nodes = net.nodes();
  count = std::clamp<std::size_t>(count, 1, nodes.size());
  std::vector<std::size_t> roots{lowest_id_index(net)};
  std::vector<double> nearest(nodes.size(), std::numeric_limits<double>::infinity());
  while (roots.size() < count) {
    const Point last = nodes[roots.back()].xy();
    std::size_t pick = nodes.size();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      nearest[i] = std::min(nearest[i], distance(nodes[i].xy(), last));
      if (pick == nodes.size() || nearest[i] > nearest[pick] ||
          (nearest[i] == nearest[pick] && nodes[i].id < nodes[pick].id)) {
        pick = i;
      }
    }
    roots.push_back(pick);
  }
  return roots;
}

std::vector<double> attribute_keys(const Network& net, Criterion key, Sense sense) {
  std::vector<double> keys;
  keys.reserve(net.edges().size());
  for (const Edge& e : net.edges()) {
    const double v = attribute(e.attr, key);
    keys.push_back(sense == Sense::Minimize ? v : -v);
  }
  return keys;
}

} // namespace

WeightVector::WeightVector(std::array<double, 4> w) : w_(w) {
  double sum = 0.0;
  for (const double v : w_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InvalidInput("weights must be finite and nonnegative");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw InvalidInput("weights must sum to 1");
  }
}

WeightVector WeightVector::corner(Criterion c) {
  std::array<double, 4> w{};
  w[static_cast<std::size_t>(c)] = 1.0;
  return WeightVector(w);
}

std::array<AttributeBounds, 4> attribute_bounds(const Network& net) {
  std::array<AttributeBounds, 4> bounds{};
  bool first = true;
  for (const Edge& e : net.edges()) {
    for (const Criterion c : kCriteria) {
      auto& b = bounds[static_cast<std::size_t>(c)];
      const double v = attribute(e.attr, c);
      if (first) {
        b = {v, v};
      } else {
        b.min = std::min(b.min, v);
        b.max = std::max(b.max, v);
      }
    }
    first = false;
  }
  return bounds;
}

ScalarizationConfig ScalarizationConfig::over(const Network& net, const WeightVector& weights,
                                              const SenseVector& senses) {
  return {weights, senses, attribute_bounds(net)};
}

double quadratic_utility(const EdgeAttr& attrs, const ScalarizationConfig& cfg) {
  double u = 0.0;
  for (const Criterion c : kCriteria) {
    const auto& b = cfg.bounds[static_cast<std::size_t>(c)];
    const double span = b.max - b.min;
    if (!(span > 0.0)) {
      continue;
    }
    double g = (attribute(attrs, c) - b.min) / span;
    if (cfg.senses[c] == Sense::Maximize) {
      g = 1.0 - g;
    }
    u += cfg.weights[c] * g * g;
  }
  return u;
}

EdgeSet kruskal_mst(const Network& net, Criterion key, Sense sense) {
  const auto keys = attribute_keys(net, key, sense);
  const auto& edges = net.edges();
  std::vector<RankedEdge> order;
  order.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    order.emplace_back(keys[e], edges[e].id.a, edges[e].id.b, e);
  }
  std::sort(order.begin(), order.end());

  EdgeSet tree;
  detail::DisjointSets sets(net.size());
  for (const auto& [k, a, b, e] : order) {
    if (sets.unite(net.index_of(a), net.index_of(b))) {
      tree.push_back(edges[e].id);
    }
  }
  if (net.size() > 0 && tree.size() + 1 != net.size()) {
    throw_disconnected(net);
  }
  return tree;
}

EdgeSet prim_mst(const Network& net, Criterion key, Sense sense) {
  if (net.size() == 0) {
    return {};
  }
  return grow(net, attribute_keys(net, key, sense), {lowest_id_index(net)});
}

EdgeSet multicriteria_prim(const Network& net, const ScalarizationConfig& cfg, std::size_t roots) {
  if (net.size() == 0) {
    return {};
  }
  std::vector<double> keys;
  keys.reserve(net.edges().size());
  for (const Edge& e : net.edges()) {
    keys.push_back(quadratic_utility(e.attr, cfg));
  }
  return grow(net, keys, spread_roots(net, roots));
}

double scalarized_total(const Network& net, const EdgeSet& edges, const ScalarizationConfig& cfg) {
  double total = 0.0;
  for (const EdgeId& e : edges) {
    total += quadratic_utility(net.attr(e), cfg);
  }
  return total;
}

std::vector<WeightVector> weight_sweep(int granularity) {
  if (granularity < 1) {
    throw InvalidInput("weight sweep granularity must be >= 1");
  }
  const int g = granularity;
  const double inv = static_cast<double>(g);
  std::vector<WeightVector> out;
  for (int a = g; a >= 0; --a) {
    for (int b = g - a; b >= 0; --b) {
      for (int c = g - a - b; c >= 0; --c) {
        const int d = g - a - b - c;
        out.emplace_back(std::array<double, 4>{a / inv, b / inv, c / inv, d / inv});
      }
    }
  }
  return out;
}

std::vector<std::vector<NodeId>> connected_components(const Network& net) {
  detail::DisjointSets sets(net.size());
  for (const Edge& e : net.edges()) {
    sets.unite(net.index_of(e.id.a), net.index_of(e.id.b));
  }
  std::vector<std::vector<NodeId>> by_root(net.size());
  for (std::size_t i = 0; i < net.size(); ++i) {
    by_root[sets.find(i)].push_back(net.nodes()[i].id);
  }
  std::vector<std::vector<NodeId>> out;
  for (auto& comp : by_root) {
    if (!comp.empty()) {
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace mstp
