#pragma once

// Euclidean Steiner trees per cluster: MST-seeded Fermat-point insertion with
// geometric-median refinement, and reassembly into a full network topology.

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "mstp/clustering.hpp"
#include "mstp/model.hpp"

namespace mstp {

/// Point minimizing the summed distance to three points. When the triangle has
/// an interior angle of at least 120 degrees, that vertex is returned exactly.
/// Throws InvalidInput if two of the points coincide.
Point fermat_point(Point p1, Point p2, Point p3);

/// Largest angle deficit tolerated at a Steiner point (radians below 120 degrees).
inline constexpr double kSteinerAngleTolerance = 1e-3;

/// Steiner tree over one cluster in local coordinates.
struct LocalSteinerTree {
  /// Terminals first (same order as the input), then Steiner points.
  std::vector<Point> points;
  std::size_t terminal_count = 0;
  /// Local index pairs (i < j), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Length of the Euclidean MST over the terminals the heuristic started from.
  double mst_length = 0.0;

  double length() const;
  std::size_t steiner_count() const { return points.size() - terminal_count; }
};

/// Requires at least one terminal. One or two terminals yield the trivial tree.
LocalSteinerTree steiner_tree_cluster(std::span<const Node> terminals);

struct StationFields {
  double z = 0.0;
  double s = 0.0;
};

/// Inverse-distance weighted (1 / max(d, 1e-9)) mean of the terminals' altitude
/// and rating; a position on a terminal copies that terminal.
StationFields derive_steiner_node_fields(Point position, std::span<const Node> terminals);

struct SteinerPart {
  std::size_t cluster = 0;          // index into Partition::clusters
  std::vector<NodeId> terminals;    // ids solved together
  double replaced_length = 0.0;     // input tree length removed
  double mst_length = 0.0;
  double steiner_length = 0.0;
};

struct SteinerSolution {
  /// Input nodes plus Steiner nodes; candidate edges plus every tree edge.
  Network network;
  EdgeSet tree;
  /// Steiner node id -> index of the cluster that produced it.
  std::map<NodeId, std::size_t> provenance;
  std::vector<SteinerPart> parts;
};

/// Replaces, inside every cluster, each group of at least three terminals that
/// the input tree connects through intra-cluster edges by a local Steiner tree.
/// Inter-cluster edges are kept. New Steiner node ids start above `net.max_id()`.
/// Throws InvalidInput if `tree` is not a spanning tree of `net` or `partition`
/// does not cover its terminals.
SteinerSolution steinerize(const Network& net, const EdgeSet& tree, const Partition& partition);

} // namespace mstp
