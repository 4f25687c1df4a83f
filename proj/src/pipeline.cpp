#include "mstp/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mstp/pareto.hpp"
#include "mstp/steiner.hpp"

namespace mstp {

namespace {

// Uniform in [0, 1) from the top 53 bits; unlike std::uniform_real_distribution
// this mapping is identical on every standard library.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double uniform(std::mt19937_64& rng, double lo, double hi) { return lo + (hi - lo) * unit(rng); }

} // namespace

Network generate_instance(int n, std::uint64_t seed, const Terrain& terrain, CostCoefficients coeffs) {
  if (n < 1) {
    throw InvalidInput("instance size must be >= 1");
  }
  if (terrain.hills < 0 || !(terrain.sigma > 0.0) || !std::isfinite(terrain.amplitude)) {
    throw InvalidInput("terrain needs hills >= 0, sigma > 0 and a finite amplitude");
  }
  std::mt19937_64 rng(seed);
  std::vector<Point> centers;
  for (int h = 0; h < terrain.hills; ++h) {
    const double x = uniform(rng, 0.0, 100.0);
    const double y = uniform(rng, 0.0, 100.0);
    centers.push_back({x, y});
  }
  const double two_sigma_sq = 2.0 * terrain.sigma * terrain.sigma;

  std::vector<Node> nodes;
  nodes.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Node node;
    node.id = i;
    node.x = uniform(rng, 0.0, 100.0);
    node.y = uniform(rng, 0.0, 100.0);
    node.s = uniform(rng, 0.1, 1.0);
    for (const Point& c : centers) {
      const double d2 = (node.x - c.x) * (node.x - c.x) + (node.y - c.y) * (node.y - c.y);
      node.z += terrain.amplitude * std::exp(-d2 / two_sigma_sq);
    }
    nodes.push_back(node);
  }
  return Network(std::move(nodes), std::nullopt, coeffs);
}

const char* approach_name(Approach a) {
  switch (a) {
  case Approach::Mst:
    return "MST";
  case Approach::Mmst:
    return "MMST";
  case Approach::Mstp:
    return "MSTP";
  }
  return "?";
}

Network SchemeResult::entry_network(const SchemeEntry& entry) const {
  if (entry.steiner_nodes.empty()) {
    return network;
  }
  std::vector<Node> nodes = network.nodes();
  nodes.insert(nodes.end(), entry.steiner_nodes.begin(), entry.steiner_nodes.end());
  std::vector<EdgeId> candidates;
  candidates.reserve(network.edges().size() + entry.edges.size());
  for (const Edge& e : network.edges()) {
    candidates.push_back(e.id);
  }
  candidates.insert(candidates.end(), entry.edges.begin(), entry.edges.end());
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return Network(std::move(nodes), std::move(candidates), network.coefficients());
}

const SchemeEntry* SchemeResult::find(const std::string& label) const {
  for (const SchemeEntry& e : entries) {
    if (e.label == label) {
      return &e;
    }
  }
  return nullptr;
}

SchemeResult run_scheme(const Network& instance, const SchemeConfig& cfg) {
  if (instance.size() != instance.ids(NodeKind::Terminal).size()) {
    throw InvalidInput("run_scheme: instance must contain terminals only");
  }
  SchemeResult result;
  result.config = cfg;
  result.config.granularity = std::max(cfg.granularity, 1);
  result.network = instance.with_coefficients(cfg.coefficients);
  const Network& net = result.network;

  SchemeEntry mst;
  mst.label = "MST";
  mst.approach = Approach::Mst;
  mst.edges = prim_mst(net, Criterion::Length);
  std::sort(mst.edges.begin(), mst.edges.end());
  mst.objectives = tree_objectives(net, mst.edges);
  result.entries.push_back(std::move(mst));

  // Clustering only looks at positions, so one partition serves every weight.
  result.partition = agglomerate(net, cfg.max_cluster);

  const auto sweep = weight_sweep(result.config.granularity);
  std::vector<SchemeEntry> steinerized;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const auto scal = ScalarizationConfig::over(net, sweep[i], cfg.senses);
    SchemeEntry mmst;
    mmst.label = "MMST-" + std::to_string(i + 1);
    mmst.approach = Approach::Mmst;
    mmst.weights = sweep[i];
    mmst.edges = multicriteria_prim(net, scal, cfg.roots);
    std::sort(mmst.edges.begin(), mmst.edges.end());
    mmst.objectives = tree_objectives(net, mmst.edges);

    const SteinerSolution sol = steinerize(net, mmst.edges, result.partition);
    SchemeEntry mstp;
    mstp.label = "MSTP-" + std::to_string(i + 1);
    mstp.approach = Approach::Mstp;
    mstp.weights = sweep[i];
    for (const Node& n : sol.network.nodes()) {
      if (n.kind == NodeKind::Steiner) {
        mstp.steiner_nodes.push_back(n);
      }
    }
    mstp.edges = sol.tree;
    mstp.objectives = tree_objectives(sol.network, mstp.edges);

    result.entries.push_back(std::move(mmst));
    steinerized.push_back(std::move(mstp));
  }
  for (auto& e : steinerized) {
    result.entries.push_back(std::move(e));
  }

  std::vector<ObjectiveVector> vectors;
  for (const auto& e : result.entries) {
    vectors.push_back(e.objectives);
  }
  const auto layers = pareto_layers(vectors, cfg.senses);
  for (std::size_t i = 0; i < layers.size(); ++i) {
    result.entries[i].pareto_layer = layers[i];
  }
  return result;
}

} // namespace mstp
