#include <doctest.h>

#include <cmath>
#include <random>

#include "mstp/instance.hpp"
#include "mstp/model.hpp"
#include "oracles.hpp"

using namespace mstp;

namespace {

Node at(NodeId id, double x, double y, double z = 0.0, double s = 0.0) { return {id, x, y, z, s, NodeKind::Terminal}; }

} // namespace

TEST_CASE("edge_length") {
  CHECK(edge_length(at(0, 0, 0), at(1, 0, 0)) == 0.0);
  CHECK(edge_length(at(0, 0, 0), at(1, 3, 4)) == doctest::Approx(5.0).epsilon(1e-15));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 100; ++i) {
    const Node a = at(0, u(rng), u(rng));
    const Node b = at(1, u(rng), u(rng));
    const long double ref = oracle::hp_distance(a.x, a.y, b.x, b.y);
    const double got = edge_length(a, b);
    CHECK(std::abs(got - static_cast<double>(ref)) <= 1e-12 * static_cast<double>(ref));
    CHECK(got == edge_length(b, a));
  }
}

TEST_CASE("edge_altitude_gap") {
  CHECK(edge_altitude_gap(at(0, 0, 0, 5), at(1, 1, 1, 5)) == 0.0);
  CHECK(edge_altitude_gap(at(0, 0, 0, 2), at(1, 1, 1, 7)) == 5.0);
  CHECK(edge_altitude_gap(at(0, 0, 0, 7), at(1, 1, 1, 2)) == 5.0);
}

TEST_CASE("edge_cost") {
  CHECK(edge_cost(0, 0, 0.001, 1) == 0.0);
  CHECK(edge_cost(2, 3, 1, 1) == 11.0);
  CHECK(edge_cost(1.5, 0.4, 0.01, 1) == doctest::Approx(0.43375).epsilon(1e-14));
  CHECK(edge_cost(2, 1, 1, 1) <= edge_cost(3, 1, 1, 1));
  CHECK(edge_cost(2, 1, 1, 1) <= edge_cost(2, 2, 1, 1));
  CHECK_THROWS_AS(edge_cost(-1, 0, 1, 1), InvalidInput);
  CHECK_THROWS_AS(edge_cost(0, -1, 1, 1), InvalidInput);
  CHECK_THROWS_AS(edge_cost(0, 0, -1, 1), InvalidInput);
}

TEST_CASE("edge_qos") {
  CHECK(edge_qos(at(0, 0, 0, 0, 0), at(1, 0, 0, 0, 0)) == 0.0);
  CHECK(edge_qos(at(0, 0, 0, 0, 2), at(1, 0, 0, 0, 4)) == 3.0);
  CHECK(edge_qos(at(0, 0, 0, 0, 4), at(1, 0, 0, 0, 2)) == 3.0);
}

TEST_CASE("network construction validates and builds the complete graph") {
  const Network net({at(0, 0, 0), at(1, 1, 0), at(2, 0, 1), at(5, 3, 3)}, std::nullopt);
  CHECK(net.is_complete());
  CHECK(net.edges().size() == 6);
  CHECK(std::is_sorted(net.edges().begin(), net.edges().end(),
                       [](const Edge& a, const Edge& b) { return a.id < b.id; }));
  CHECK(net.find_edge({5, 2}) != nullptr);
  CHECK(net.find_edge({5, 5}) == nullptr);

  CHECK_THROWS_AS(Network({at(0, 0, 0), at(0, 1, 1)}, std::nullopt), InvalidInput);
  CHECK_THROWS_AS(Network({at(-1, 0, 0)}, std::nullopt), InvalidInput);
  CHECK_THROWS_AS(Network({at(0, 0, 0, 0, -0.5)}, std::nullopt), InvalidInput);
  CHECK_THROWS_AS(Network({at(0, 0, 0), at(1, 1, 1)}, std::vector<EdgeId>{{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Network({at(0, 0, 0), at(1, 1, 1)}, std::vector<EdgeId>{{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Network({at(0, 0, 0), at(1, 1, 1)}, std::vector<EdgeId>{{0, 7}}), InvalidInput);
  CHECK_THROWS_AS(Network({at(0, 0, 0)}, std::nullopt, {-1.0, 1.0}), InvalidInput);
}

TEST_CASE("stored attributes match recomputation from endpoints") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0, 100);
  std::vector<Node> nodes;
  for (int i = 0; i < 25; ++i) {
    nodes.push_back(at(i, u(rng), u(rng), u(rng) / 5, u(rng) / 100));
  }
  const CostCoefficients coeffs{0.003, 2.0};
  const Network net(nodes, std::nullopt, coeffs);
  auto rel = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };
  for (const Edge& e : net.edges()) {
    const Node& a = net.node(e.id.a);
    const Node& b = net.node(e.id.b);
    const double l = static_cast<double>(oracle::hp_distance(a.x, a.y, b.x, b.y));
    const double d = std::abs(a.z - b.z);
    const double q = (a.s + b.s) / 2;
    CHECK(rel(e.attr.length, l));
    CHECK(rel(e.attr.altitude_gap, d));
    CHECK(rel(e.attr.qos, q));
    CHECK(rel(e.attr.cost, coeffs.alpha * d * d * d + coeffs.beta * q));
    const EdgeAttr swapped = edge_attributes(b, a, coeffs);
    CHECK(swapped.length == e.attr.length);
    CHECK(swapped.cost == e.attr.cost);
  }
}

TEST_CASE("tree_objectives") {
  // Chosen so that edge (0,1) has l = 5, q = 3, delta = 2 and with alpha = beta = 1, c = 11.
  const Network single({at(0, 0, 0, 0, 2), at(1, 3, 4, 2, 4)}, std::nullopt, {1.0, 1.0});
  CHECK(tree_objectives(single, {}) == ObjectiveVector{});
  const EdgeSet one{{0, 1}};
  const ObjectiveVector v = tree_objectives(single, one);
  CHECK(v.length == doctest::Approx(5));
  CHECK(v.cost == doctest::Approx(11));
  CHECK(v.qos == doctest::Approx(3));
  CHECK(v.altitude_gap == doctest::Approx(2));

  const Network path({at(0, 0, 0, 1, 0.5), at(1, 1, 0, 3, 0.2), at(2, 1, 2, 0, 0.9), at(3, 4, 6, 2, 0.1)},
                     std::vector<EdgeId>{{0, 1}, {1, 2}, {2, 3}});
  const EdgeSet all{{0, 1}, {1, 2}, {2, 3}};
  ObjectiveVector manual;
  for (const EdgeId& e : all) {
    const EdgeAttr& a = path.attr(e);
    manual.length += a.length;
    manual.cost += a.cost;
    manual.qos += a.qos;
    manual.altitude_gap += a.altitude_gap;
  }
  CHECK(tree_objectives(path, all) == manual);
  CHECK(tree_objectives(path, all).length == doctest::Approx(1 + 2 + 5));

  // Additivity over disjoint subsets.
  const EdgeSet left{{0, 1}};
  const EdgeSet right{{1, 2}, {2, 3}};
  const ObjectiveVector sum = tree_objectives(path, left) + tree_objectives(path, right);
  CHECK(sum.length == doctest::Approx(manual.length));
  CHECK(sum.cost == doctest::Approx(manual.cost));

  const EdgeSet unknown{{0, 3}};
  CHECK_THROWS_AS(tree_objectives(path, unknown), InvalidInput);
}

TEST_CASE("instance JSON round trip and schema errors") {
  const Network net({at(0, 1.5, 2.5, 3, 0.5), at(4, 0, 0, 1, 0.25), at(2, 9, 9, 0, 0)},
                    std::vector<EdgeId>{{0, 4}, {4, 2}}, {0.002, 0.5});
  const Network back = instance_from_json(instance_to_json(net));
  CHECK(instance_to_json(back) == instance_to_json(net));
  CHECK_FALSE(back.is_complete());

  const Network complete({at(0, 0, 0)}, std::nullopt);
  CHECK(instance_to_json(complete)["edges"].is_null());

  CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"nodes": 3})")), InvalidInput);
  CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(R"({"nodes": [{"id": 0, "x": 0, "y": 0, "z": 0}]})")),
                  InvalidInput);
  CHECK_THROWS_AS(instance_from_json(nlohmann::json::parse(
                      R"({"nodes": [{"id": 0, "x": 0, "y": 0, "z": 0, "s": 0}], "edges": [[0]]})")),
                  InvalidInput);
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.json"), IoError);
}
