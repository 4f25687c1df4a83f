#pragma once

#include <optional>
#include <random>
#include <vector>

#include "mstp/model.hpp"

namespace fixtures {

inline mstp::Node terminal(mstp::NodeId id, double x, double y, double z = 0.0, double s = 0.0) {
  return {id, x, y, z, s, mstp::NodeKind::Terminal};
}

/// Random stations in [0, 100]^2 with altitude in [0, 30] and rating in [0.1, 1].
inline mstp::Network random_network(int n, unsigned seed, std::optional<std::vector<mstp::EdgeId>> edges = std::nullopt,
                                    mstp::CostCoefficients coeffs = {}) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> pos(0.0, 100.0);
  std::uniform_real_distribution<double> alt(0.0, 30.0);
  std::uniform_real_distribution<double> rating(0.1, 1.0);
  std::vector<mstp::Node> nodes;
  for (int i = 0; i < n; ++i) {
    const double x = pos(rng);
    const double y = pos(rng);
    const double z = alt(rng);
    const double s = rating(rng);
    nodes.push_back(terminal(i, x, y, z, s));
  }
  return mstp::Network(std::move(nodes), std::move(edges), coeffs);
}

} // namespace fixtures
