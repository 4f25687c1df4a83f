#include "mstp/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "disjoint_sets.hpp"

namespace mstp {

namespace {

void require_finite(double v, const char* what, NodeId id) {
  if (!std::isfinite(v)) {
    throw InvalidInput("node " + std::to_string(id) + ": " + what + " is not finite");
  }
}

} // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

const char* criterion_name(Criterion c) {
  switch (c) {
  case Criterion::Length:
    return "L";
  case Criterion::Cost:
    return "C";
  case Criterion::Qos:
    return "Q";
  case Criterion::AltitudeGap:
    return "Delta";
  }
  return "?";
}

double attribute(const EdgeAttr& attr, Criterion c) {
  switch (c) {
  case Criterion::Length:
    return attr.length;
  case Criterion::Cost:
    return attr.cost;
  case Criterion::Qos:
    return attr.qos;
  case Criterion::AltitudeGap:
    return attr.altitude_gap;
  }
  return 0.0;
}

double ObjectiveVector::operator[](Criterion c) const {
  switch (c) {
  case Criterion::Length:
    return length;
  case Criterion::Cost:
    return cost;
  case Criterion::Qos:
    return qos;
  case Criterion::AltitudeGap:
    return altitude_gap;
  }
  return 0.0;
}

ObjectiveVector& ObjectiveVector::operator+=(const ObjectiveVector& o) {
  length += o.length;
  cost += o.cost;
  qos += o.qos;
  altitude_gap += o.altitude_gap;
  return *this;
}

double edge_length(const Node& a, const Node& b) { return distance(a.xy(), b.xy()); }

double edge_altitude_gap(const Node& a, const Node& b) { return std::abs(a.z - b.z); }

double edge_qos(const Node& a, const Node& b) { return 0.5 * (a.s + b.s); }

double edge_cost(double delta, double q, double alpha, double beta) {
  if (delta < 0.0 || q < 0.0 || alpha < 0.0 || beta < 0.0) {
    throw InvalidInput("edge_cost: arguments must be nonnegative");
  }
  return alpha * delta * delta * delta + beta * q;
}

EdgeAttr edge_attributes(const Node& a, const Node& b, const CostCoefficients& coeffs) {
  EdgeAttr attr;
  attr.length = edge_length(a, b);
  attr.altitude_gap = edge_altitude_gap(a, b);
  attr.qos = edge_qos(a, b);
  attr.cost = edge_cost(attr.altitude_gap, attr.qos, coeffs.alpha, coeffs.beta);
  return attr;
}

Network::Network(std::vector<Node> nodes, std::optional<std::vector<EdgeId>> candidate_edges,
                 CostCoefficients coeffs)
    : nodes_(std::move(nodes)), coeffs_(coeffs), complete_(!candidate_edges.has_value()) {
  if (!(coeffs_.alpha >= 0.0) || !(coeffs_.beta >= 0.0) || !std::isfinite(coeffs_.alpha) ||
      !std::isfinite(coeffs_.beta)) {
    throw InvalidInput("cost coefficients must be finite and nonnegative");
  }
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (n.id < 0) {
      throw InvalidInput("node id " + std::to_string(n.id) + " is negative");
    }
    require_finite(n.x, "x", n.id);
    require_finite(n.y, "y", n.id);
    require_finite(n.z, "z", n.id);
    require_finite(n.s, "s", n.id);
    if (n.s < 0.0) {
      throw InvalidInput("node " + std::to_string(n.id) + ": QoS rating s is negative");
    }
    if (!index_.emplace(n.id, i).second) {
      throw InvalidInput("duplicate node id " + std::to_string(n.id));
    }
  }

  std::vector<EdgeId> ids;
  if (candidate_edges) {
    ids.reserve(candidate_edges->size());
    for (const EdgeId& raw : *candidate_edges) {
      if (raw.a == raw.b) {
        throw InvalidInput("self-loop on node " + std::to_string(raw.a));
      }
      if (!contains(raw.a) || !contains(raw.b)) {
        throw InvalidInput("edge (" + std::to_string(raw.a) + ", " + std::to_string(raw.b) +
                           ") references an unknown node");
      }
      ids.push_back(EdgeId::of(raw.a, raw.b));
    }
    std::sort(ids.begin(), ids.end());
    const auto dup = std::adjacent_find(ids.begin(), ids.end());
    if (dup != ids.end()) {
      throw InvalidInput("parallel edge (" + std::to_string(dup->a) + ", " + std::to_string(dup->b) + ")");
    }
  } else {
    std::vector<NodeId> all;
    all.reserve(nodes_.size());
    for (const Node& n : nodes_) {
      all.push_back(n.id);
    }
    std::sort(all.begin(), all.end());
    ids.reserve(all.size() * (all.size() - (all.empty() ? 0 : 1)) / 2);
    for (std::size_t i = 0; i < all.size(); ++i) {
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        ids.push_back({all[i], all[j]});
      }
    }
  }

  edges_.reserve(ids.size());
  for (const EdgeId& id : ids) {
    edges_.push_back({id, edge_attributes(node(id.a), node(id.b), coeffs_)});
  }
}

const Node& Network::node(NodeId id) const { return nodes_[index_of(id)]; }

std::size_t Network::index_of(NodeId id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) {
    throw InvalidInput("unknown node id " + std::to_string(id));
  }
  return it->second;
}

const Edge* Network::find_edge(EdgeId id) const {
  id = EdgeId::of(id.a, id.b);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                                   [](const Edge& e, const EdgeId& key) { return e.id < key; });
  if (it == edges_.end() || it->id != id) {
    return nullptr;
  }
  return &*it;
}

const EdgeAttr& Network::attr(EdgeId id) const {
  const Edge* e = find_edge(id);
  if (e == nullptr) {
    throw InvalidInput("unknown edge (" + std::to_string(id.a) + ", " + std::to_string(id.b) + ")");
  }
  return e->attr;
}

std::vector<NodeId> Network::ids(NodeKind kind) const {
  std::vector<NodeId> out;
  for (const Node& n : nodes_) {
    if (n.kind == kind) {
      out.push_back(n.id);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NodeId Network::max_id() const {
  NodeId m = -1;
  for (const Node& n : nodes_) {
    m = std::max(m, n.id);
  }
  return m;
}

Network Network::with_coefficients(CostCoefficients coeffs) const {
  std::optional<std::vector<EdgeId>> candidates;
  if (!complete_) {
    candidates.emplace();
    for (const Edge& e : edges_) {
      candidates->push_back(e.id);
    }
  }
  return Network(nodes_, std::move(candidates), coeffs);
}

ObjectiveVector tree_objectives(const Network& net, std::span<const EdgeId> edges) {
  ObjectiveVector sum;
  for (const EdgeId& id : edges) {
    const EdgeAttr& a = net.attr(id);
    sum += ObjectiveVector{a.length, a.cost, a.qos, a.altitude_gap};
  }
  return sum;
}

bool is_spanning_tree(const Network& net, std::span<const EdgeId> edges) {
  const std::size_t n = net.size();
  if (n == 0) {
    return edges.empty();
  }
  if (edges.size() != n - 1) {
    return false;
  }
  detail::DisjointSets sets(n);
  for (const EdgeId& e : edges) {
    if (net.find_edge(e) == nullptr) {
      return false;
    }
    if (!sets.unite(net.index_of(e.a), net.index_of(e.b))) {
      return false;
    }
  }
  return sets.count() == 1;
}

} // namespace mstp
