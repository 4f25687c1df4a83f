#pragma once

// Exact minimum spanning trees and the multicriteria spanning tree built by
// ranking candidate edges with a quadratic utility.

#include <array>
#include <cstddef>
#include <vector>

#include "mstp/model.hpp"

namespace mstp {

/// Nonnegative weights over (L, C, Q, Delta) summing to one.
class WeightVector {
public:
  /// Throws InvalidInput if a weight is negative or the sum is off by more than 1e-12.
  explicit WeightVector(std::array<double, 4> w);
  WeightVector() : WeightVector({0.25, 0.25, 0.25, 0.25}) {}

  double operator[](Criterion c) const { return w_[static_cast<std::size_t>(c)]; }
  const std::array<double, 4>& values() const noexcept { return w_; }

  static WeightVector corner(Criterion c);

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
  std::array<double, 4> w_;
};

struct AttributeBounds {
  double min = 0.0;
  double max = 0.0;
};

/// Per-attribute [min, max] over the candidate edge set of `net`.
std::array<AttributeBounds, 4> attribute_bounds(const Network& net);

struct ScalarizationConfig {
  WeightVector weights;
  SenseVector senses;
  std::array<AttributeBounds, 4> bounds{};

  /// Bounds taken over `net`'s candidate edges.
  static ScalarizationConfig over(const Network& net, const WeightVector& weights, const SenseVector& senses);
};

/// sum_k w_k * g_k^2 with g_k the attribute min-max normalized so that 0 is the
/// best value under the configured sense. Degenerate bounds contribute 0.
double quadratic_utility(const EdgeAttr& attrs, const ScalarizationConfig& cfg);

/// Kruskal over the selected attribute (Maximize yields a maximum spanning tree).
/// Throws Infeasible when the candidate edges do not connect the network.
EdgeSet kruskal_mst(const Network& net, Criterion key, Sense sense = Sense::Minimize);

/// Prim from the lowest node id; same contract as kruskal_mst.
EdgeSet prim_mst(const Network& net, Criterion key, Sense sense = Sense::Minimize);

/// Prim grown by minimum quadratic utility. Ties go to the lexicographically
/// smallest (utility, min id, max id). With `roots > 1`, a forest is grown from
/// that many spread-out roots and then joined by cheapest-utility edges.
EdgeSet multicriteria_prim(const Network& net, const ScalarizationConfig& cfg, std::size_t roots = 1);

/// Sum of quadratic_utility over an edge set.
double scalarized_total(const Network& net, const EdgeSet& edges, const ScalarizationConfig& cfg);

/// All (a, b, c, d) / g with a + b + c + d = g, ordered with a descending, then
/// b, then c. The first four vectors for g = 1 are the simplex corners L, C, Q, Delta.
std::vector<WeightVector> weight_sweep(int granularity);

/// Connected components under the candidate edges, each sorted, ordered by smallest id.
std::vector<std::vector<NodeId>> connected_components(const Network& net);

} // namespace mstp
