#pragma once

// Pareto dominance and layer peeling over objective vectors.

#include <span>
#include <string>
#include <vector>

#include "mstp/model.hpp"

namespace mstp {

/// u dominates v: no worse in every component under its sense and strictly
/// better in at least one. Exact comparison. Throws InvalidInput on NaN.
bool dominates(const ObjectiveVector& u, const ObjectiveVector& v, const SenseVector& senses);

/// Layer of each input vector (1 = non-dominated; layer k is non-dominated once
/// layers < k are removed). Equal vectors share a layer.
/// Throws InvalidInput for an empty input or a NaN component.
std::vector<int> pareto_layers(std::span<const ObjectiveVector> vectors, const SenseVector& senses);

struct LayeredItem {
  std::string label;
  ObjectiveVector objectives;
  int layer = 0;
};

using LayeredSet = std::vector<LayeredItem>;

/// pareto_layers over labelled vectors; output keeps input order.
LayeredSet layer_items(std::span<const std::string> labels, std::span<const ObjectiveVector> vectors,
                       const SenseVector& senses);

} // namespace mstp
