#pragma once

// Size-capped single-linkage agglomerative clustering of terminal stations.

#include <cstddef>
#include <vector>

#include "mstp/model.hpp"

namespace mstp {

struct Partition {
  /// Each cluster sorted ascending; clusters ordered by their smallest id.
  std::vector<std::vector<NodeId>> clusters;
  std::size_t max_size = 6;

  friend bool operator==(const Partition&, const Partition&) = default;
};

struct MergeStep {
  NodeId first;  // smallest id of the cluster with the lower smallest id
  NodeId second; // smallest id of the other cluster
  double distance;
  std::size_t merged_size;
};

struct Agglomeration {
  Partition partition;
  std::vector<MergeStep> merges;
};

/// Starts from singletons and repeatedly merges the closest pair (single
/// linkage, xy distance) whose union fits in `max_size`. Ties break on
/// (distance, lower smallest id, higher smallest id). Only Terminal nodes take part.
Agglomeration agglomerate_with_log(const Network& net, std::size_t max_size = 6);

Partition agglomerate(const Network& net, std::size_t max_size = 6);

/// Throws InvalidInput unless `p` is a disjoint cover of `terminals` with every
/// cluster size in [1, max_size].
void validate_partition(const Partition& p, const std::vector<NodeId>& terminals);

} // namespace mstp
