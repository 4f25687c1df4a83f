#pragma once

// Geometric network model: stations, per-link attributes, and objective
// aggregation over edge sets.

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "mstp/errors.hpp"

namespace mstp {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

double distance(Point a, Point b);

enum class NodeKind { Terminal, Steiner };

/// A station. `z` is the altitude in meters, `s` the station's QoS rating.
struct Node {
  NodeId id = 0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double s = 0.0;
  NodeKind kind = NodeKind::Terminal;

  Point xy() const { return {x, y}; }
};

/// Undirected edge identifier, always stored with a < b.
struct EdgeId {
  NodeId a = 0;
  NodeId b = 0;

  static EdgeId of(NodeId u, NodeId v) { return u < v ? EdgeId{u, v} : EdgeId{v, u}; }

  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

using EdgeSet = std::vector<EdgeId>;

struct EdgeAttr {
  double length = 0.0;       // l
  double qos = 0.0;          // q
  double altitude_gap = 0.0; // delta
  double cost = 0.0;         // c
};

struct Edge {
  EdgeId id;
  EdgeAttr attr;
};

struct CostCoefficients {
  double alpha = 0.001;
  double beta = 1.0;

  friend bool operator==(const CostCoefficients&, const CostCoefficients&) = default;
};

/// The four criteria in canonical (L, C, Q, Delta) order.
enum class Criterion : std::size_t { Length = 0, Cost = 1, Qos = 2, AltitudeGap = 3 };

inline constexpr std::array<Criterion, 4> kCriteria{Criterion::Length, Criterion::Cost, Criterion::Qos,
                                                     Criterion::AltitudeGap};

const char* criterion_name(Criterion c);

double attribute(const EdgeAttr& attr, Criterion c);

enum class Sense { Minimize, Maximize };

struct SenseVector {
  std::array<Sense, 4> senses{Sense::Minimize, Sense::Minimize, Sense::Maximize, Sense::Minimize};

  Sense operator[](Criterion c) const { return senses[static_cast<std::size_t>(c)]; }
  Sense& operator[](Criterion c) { return senses[static_cast<std::size_t>(c)]; }

  /// (Min, Min, Max, Min): total length, cost and altitude gap minimized, QoS maximized.
  static SenseVector standard() { return {}; }
  static SenseVector all_minimize() {
    return {{Sense::Minimize, Sense::Minimize, Sense::Minimize, Sense::Minimize}};
  }

  friend bool operator==(const SenseVector&, const SenseVector&) = default;
};

struct ObjectiveVector {
  double length = 0.0;       // L
  double cost = 0.0;         // C
  double qos = 0.0;          // Q
  double altitude_gap = 0.0; // Delta

  double operator[](Criterion c) const;

  ObjectiveVector& operator+=(const ObjectiveVector& o);
  friend ObjectiveVector operator+(ObjectiveVector a, const ObjectiveVector& b) { return a += b; }
  friend bool operator==(const ObjectiveVector&, const ObjectiveVector&) = default;
};

// Per-link attribute functions.
double edge_length(const Node& a, const Node& b);
double edge_altitude_gap(const Node& a, const Node& b);
double edge_qos(const Node& a, const Node& b);
/// alpha * delta^3 + beta * q. Throws InvalidInput on a negative argument.
double edge_cost(double delta, double q, double alpha, double beta);
EdgeAttr edge_attributes(const Node& a, const Node& b, const CostCoefficients& coeffs);

/// Simple undirected graph over stations with precomputed edge attributes.
/// Immutable after construction.
class Network {
public:
  Network() = default;

  /// `candidate_edges == std::nullopt` builds the complete geometric graph.
  /// Throws InvalidInput on duplicate ids, negative ratings or coefficients,
  /// loops, parallel edges or dangling endpoints.
  Network(std::vector<Node> nodes, std::optional<std::vector<EdgeId>> candidate_edges,
          CostCoefficients coeffs = {});

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  /// Sorted by id.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const CostCoefficients& coefficients() const noexcept { return coeffs_; }
  /// True when built without an explicit candidate edge list.
  bool is_complete() const noexcept { return complete_; }

  std::size_t size() const noexcept { return nodes_.size(); }
  bool contains(NodeId id) const { return index_.contains(id); }
  const Node& node(NodeId id) const;
  std::size_t index_of(NodeId id) const;

  const Edge* find_edge(EdgeId id) const;
  const EdgeAttr& attr(EdgeId id) const;

  /// Ids of the nodes of the given kind, ascending.
  std::vector<NodeId> ids(NodeKind kind) const;
  NodeId max_id() const;

  /// Same nodes with different cost coefficients; edge attributes are recomputed.
  Network with_coefficients(CostCoefficients coeffs) const;

private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::unordered_map<NodeId, std::size_t> index_;
  CostCoefficients coeffs_;
  bool complete_ = true;
};

/// Component-wise sums over `edges`. Throws InvalidInput for an edge the network lacks.
ObjectiveVector tree_objectives(const Network& net, std::span<const EdgeId> edges);

/// True when `edges` forms a spanning tree over all nodes of `net` (edges must exist in `net`).
bool is_spanning_tree(const Network& net, std::span<const EdgeId> edges);

} // namespace mstp
