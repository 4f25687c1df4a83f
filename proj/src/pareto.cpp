#include "mstp/pareto.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace mstp {

namespace {

// Components rewritten so that smaller is always better.
std::array<double, 4> as_minimized(const ObjectiveVector& v, const SenseVector& senses) {
  std::array<double, 4> out{};
  for (const Criterion c : kCriteria) {
    const double x = v[c];
    if (std::isnan(x)) {
      throw InvalidInput(std::string("objective component ") + criterion_name(c) + " is NaN");
    }
    out[static_cast<std::size_t>(c)] = senses[c] == Sense::Minimize ? x : -x;
  }
  return out;
}

bool dominates_min(const std::array<double, 4>& u, const std::array<double, 4>& v) {
  bool strict = false;
  for (std::size_t k = 0; k < 4; ++k) {
    if (u[k] > v[k]) {
      return false;
    }
    strict = strict || u[k] < v[k];
  }
  return strict;
}

} // namespace

bool dominates(const ObjectiveVector& u, const ObjectiveVector& v, const SenseVector& senses) {
  return dominates_min(as_minimized(u, senses), as_minimized(v, senses));
}

// Efficient non-dominated sort with sequential front search: after a
// lexicographic sort every dominator of an item precedes it, so each item joins
// the first front holding none of its dominators.
std::vector<int> pareto_layers(std::span<const ObjectiveVector> vectors, const SenseVector& senses) {
  if (vectors.empty()) {
    throw InvalidInput("pareto_layers: empty input");
  }
  std::vector<std::array<double, 4>> keys;
  keys.reserve(vectors.size());
  for (const auto& v : vectors) {
    keys.push_back(as_minimized(v, senses));
  }
  std::vector<std::size_t> order(vectors.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  std::vector<std::vector<std::size_t>> fronts;
  std::vector<int> layer(vectors.size(), 0);
  for (const std::size_t i : order) {
    auto dominated_by = [&](const std::vector<std::size_t>& front) {
      return std::any_of(front.rbegin(), front.rend(), [&](std::size_t j) { return dominates_min(keys[j], keys[i]); });
    };
    auto it = std::find_if(fronts.begin(), fronts.end(), [&](const auto& f) { return !dominated_by(f); });
    if (it == fronts.end()) {
      fronts.push_back({i});
      layer[i] = static_cast<int>(fronts.size());
    } else {
      it->push_back(i);
      layer[i] = static_cast<int>(it - fronts.begin()) + 1;
    }
  }
  return layer;
}

LayeredSet layer_items(std::span<const std::string> labels, std::span<const ObjectiveVector> vectors,
                       const SenseVector& senses) {
  if (labels.size() != vectors.size()) {
    throw InvalidInput("layer_items: label and vector counts differ");
  }
  const auto layers = pareto_layers(vectors, senses);
  LayeredSet out;
  out.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    out.push_back({labels[i], vectors[i], layers[i]});
  }
  return out;
}

} // namespace mstp
