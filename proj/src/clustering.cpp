#include "mstp/clustering.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_set>

namespace mstp {

Agglomeration agglomerate_with_log(const Network& net, std::size_t max_size) {
  if (max_size < 1) {
    throw InvalidInput("max cluster size must be >= 1");
  }
  std::vector<const Node*> terms;
  for (const Node& n : net.nodes()) {
    if (n.kind == NodeKind::Terminal) {
      terms.push_back(&n);
    }
  }
  std::sort(terms.begin(), terms.end(), [](const Node* a, const Node* b) { return a->id < b->id; });
  const std::size_t n = terms.size();

  // Cluster i is alive while members[i] is nonempty; its smallest id is members[i].front().
  std::vector<std::vector<NodeId>> members(n);
  std::vector<std::vector<double>> link(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    members[i] = {terms[i]->id};
    for (std::size_t j = i + 1; j < n; ++j) {
      link[i][j] = link[j][i] = distance(terms[i]->xy(), terms[j]->xy());
    }
  }

  Agglomeration out;
  out.partition.max_size = max_size;
  for (;;) {
    // Clusters are indexed in ascending order of smallest id, so (i, j) with
    // i < j already matches the (lower, higher) tie-break.
    std::size_t bi = n;
    std::size_t bj = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (members[i].empty()) {
        continue;
      }
      for (std::size_t j = i + 1; j < n; ++j) {
        if (members[j].empty() || members[i].size() + members[j].size() > max_size) {
          continue;
        }
        if (link[i][j] < best) {
          best = link[i][j];
          bi = i;
          bj = j;
        }
      }
    }
    if (bi == n) {
      break;
    }
    out.merges.push_back({members[bi].front(), members[bj].front(), best, members[bi].size() + members[bj].size()});
    members[bi].insert(members[bi].end(), members[bj].begin(), members[bj].end());
    std::sort(members[bi].begin(), members[bi].end());
    members[bj].clear();
    for (std::size_t k = 0; k < n; ++k) {
      link[bi][k] = link[k][bi] = std::min(link[bi][k], link[bj][k]);
    }
  }

  for (auto& m : members) {
    if (!m.empty()) {
      out.partition.clusters.push_back(std::move(m));
    }
  }
  return out;
}

Partition agglomerate(const Network& net, std::size_t max_size) {
  return agglomerate_with_log(net, max_size).partition;
}

void validate_partition(const Partition& p, const std::vector<NodeId>& terminals) {
  std::unordered_set<NodeId> expected(terminals.begin(), terminals.end());
  std::unordered_set<NodeId> seen;
  for (const auto& cluster : p.clusters) {
    if (cluster.empty() || cluster.size() > p.max_size) {
      throw InvalidInput("cluster size " + std::to_string(cluster.size()) + " outside [1, " +
                         std::to_string(p.max_size) + "]");
    }
    for (const NodeId id : cluster) {
      if (!expected.contains(id)) {
        throw InvalidInput("partition contains non-terminal id " + std::to_string(id));
      }
      if (!seen.insert(id).second) {
        throw InvalidInput("partition assigns id " + std::to_string(id) + " twice");
      }
    }
  }
  if (seen.size() != expected.size()) {
    throw InvalidInput("partition does not cover every terminal");
  }
}

} // namespace mstp
