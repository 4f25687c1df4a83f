#pragma once

// End-to-end topology design: MST baseline, multicriteria spanning trees over
// a weight sweep, their Steiner augmentations, and Pareto layering of all of them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mstp/clustering.hpp"
#include "mstp/model.hpp"
#include "mstp/spanning.hpp"

namespace mstp {

struct Terrain {
  int hills = 3;
  double amplitude = 20.0; // meters
  double sigma = 15.0;     // meters
};

/// `n` terminals uniform in [0, 100]^2, altitude from a sum of Gaussian hills,
/// ratings uniform in [0.1, 1.0], complete candidate graph. Fully determined by
/// the arguments (64-bit Mersenne Twister, hand-rolled uniform mapping).
Network generate_instance(int n, std::uint64_t seed, const Terrain& terrain = {},
                          CostCoefficients coeffs = {});

struct SchemeConfig {
  int granularity = 3;
  std::size_t max_cluster = 6;
  SenseVector senses = SenseVector::standard();
  CostCoefficients coefficients{};
  std::uint64_t seed = 0; // provenance of the instance; the scheme itself is deterministic
  std::size_t roots = 1;

  friend bool operator==(const SchemeConfig&, const SchemeConfig&) = default;
};

enum class Approach { Mst, Mmst, Mstp };

const char* approach_name(Approach a);

struct SchemeEntry {
  std::string label;
  Approach approach = Approach::Mst;
  std::optional<WeightVector> weights;
  std::vector<Node> steiner_nodes; // MSTP entries only
  EdgeSet edges;
  ObjectiveVector objectives;
  int pareto_layer = 0;
};

struct SchemeResult {
  SchemeConfig config;
  Network network; // terminals with the configured cost coefficients
  Partition partition;
  std::vector<SchemeEntry> entries; // MST, MMST in sweep order, MSTP in sweep order

  /// Terminals plus the entry's Steiner nodes; candidate edges plus the entry's edges.
  Network entry_network(const SchemeEntry& entry) const;
  const SchemeEntry* find(const std::string& label) const;
};

/// Runs the four stages. A granularity below 1 is raised to 1.
SchemeResult run_scheme(const Network& instance, const SchemeConfig& cfg);

} // namespace mstp
