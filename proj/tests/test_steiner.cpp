#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fixtures.hpp"
#include "mstp/clustering.hpp"
#include "mstp/spanning.hpp"
#include "mstp/steiner.hpp"
#include "oracles.hpp"

using namespace mstp;
using fixtures::terminal;

namespace {

const double kSqrt3 = std::sqrt(3.0);

double angle_between(Point apex, Point p, Point q) {
  const double ux = p.x - apex.x, uy = p.y - apex.y, vx = q.x - apex.x, vy = q.y - apex.y;
  return std::acos(std::clamp((ux * vx + uy * vy) / (std::hypot(ux, uy) * std::hypot(vx, vy)), -1.0, 1.0));
}

// Degree-3 and 120-degree conditions at every Steiner point of a local tree.
void check_steiner_points(const LocalSteinerTree& t) {
  std::vector<std::vector<std::size_t>> adj(t.points.size());
  for (const auto& [i, j] : t.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (std::size_t s = t.terminal_count; s < t.points.size(); ++s) {
    REQUIRE(adj[s].size() == 3);
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = a + 1; b < 3; ++b) {
        CHECK(angle_between(t.points[s], t.points[adj[s][a]], t.points[adj[s][b]]) >=
              2 * std::numbers::pi / 3 - kSteinerAngleTolerance);
      }
    }
  }
}

bool is_tree(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  if (edges.size() + 1 != n) {
    return false;
  }
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), std::size_t{0});
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (const auto& [a, b] : edges) {
    const auto ra = find(a), rb = find(b);
    if (ra == rb) {
      return false;
    }
    comp[ra] = rb;
  }
  return true;
}

std::vector<Node> nodes_at(const std::vector<Point>& pts) {
  std::vector<Node> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.push_back(terminal(static_cast<NodeId>(i), pts[i].x, pts[i].y, static_cast<double>(i), 0.1 * i));
  }
  return out;
}

} // namespace

TEST_CASE("fermat point fixtures") {
  const Point eq = fermat_point({0, 0}, {1, 0}, {0.5, kSqrt3 / 2});
  CHECK(std::abs(eq.x - 0.5) <= 1e-6);
  CHECK(std::abs(eq.y - kSqrt3 / 6) <= 1e-6);

  // Angle at the origin is about 153 degrees.
  const Point obtuse = fermat_point({0, 0}, {2, 0}, {-1, 0.5});
  CHECK(obtuse.x == 0.0);
  CHECK(obtuse.y == 0.0);

  const std::array<Point, 3> right{{{0, 0}, {4, 0}, {0, 3}}};
  const double ref = oracle::fermat_value_by_search(right, 1e-2);
  CHECK(std::abs(oracle::star_sum(fermat_point(right[0], right[1], right[2]), right) - ref) <= 1e-6);

  CHECK_THROWS_AS(fermat_point({1, 1}, {1, 1}, {0, 0}), InvalidInput);
}

TEST_CASE("fermat point on random triangles") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 40; ++i) {
    const std::array<Point, 3> tri{{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}};
    const Point f = fermat_point(tri[0], tri[1], tri[2]);
    const double value = oracle::star_sum(f, tri);
    CHECK(std::abs(value - oracle::fermat_value_by_search(tri, 0.05)) <= 1e-6);
    double best_vertex = std::numeric_limits<double>::infinity();
    for (const Point& p : tri) {
      best_vertex = std::min(best_vertex, oracle::star_sum(p, tri));
    }
    CHECK(value <= best_vertex + 1e-12);
  }
}

TEST_CASE("steiner_tree_cluster small fixtures") {
  const auto one = steiner_tree_cluster(nodes_at({{3, 4}}));
  CHECK(one.edges.empty());
  CHECK(one.steiner_count() == 0);

  const auto two = steiner_tree_cluster(nodes_at({{0, 0}, {3, 4}}));
  CHECK(two.edges.size() == 1);
  CHECK(two.steiner_count() == 0);
  CHECK(two.length() == doctest::Approx(5));

  const auto tri = steiner_tree_cluster(nodes_at({{0, 0}, {1, 0}, {0.5, kSqrt3 / 2}}));
  CHECK(tri.mst_length == doctest::Approx(2.0));
  REQUIRE(tri.steiner_count() == 1);
  CHECK(tri.points[3].x == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(tri.points[3].y == doctest::Approx(kSqrt3 / 6).epsilon(1e-9));
  CHECK(std::abs(tri.length() - kSqrt3) <= 1e-7);
  check_steiner_points(tri);

  // Obtuse triangle: the MST is already the Steiner minimal tree.
  const auto flat = steiner_tree_cluster(nodes_at({{0, 0}, {2, 0}, {-1, 0.5}}));
  CHECK(flat.steiner_count() == 0);
  CHECK(flat.length() == doctest::Approx(flat.mst_length));
}

TEST_CASE("unit square reaches the two-point Steiner topology") {
  const std::array<Point, 4> sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  const double brute = oracle::four_terminal_smt(sq);
  CHECK(brute == doctest::Approx(1 + kSqrt3).epsilon(1e-9));

  const auto t = steiner_tree_cluster(nodes_at({sq.begin(), sq.end()}));
  CHECK(t.mst_length == doctest::Approx(3.0));
  CHECK(t.steiner_count() == 2);
  CHECK(std::abs(t.length() - (1 + kSqrt3)) <= 1e-4);
  CHECK(is_tree(t.points.size(), t.edges));
  check_steiner_points(t);
}

TEST_CASE("random 4-terminal clusters against brute-force topologies") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(0, 10);
  int matched = 0;
  for (int i = 0; i < 30; ++i) {
    const std::array<Point, 4> pts{{{u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}, {u(rng), u(rng)}}};
    const auto t = steiner_tree_cluster(nodes_at({pts.begin(), pts.end()}));
    const double brute = oracle::four_terminal_smt(pts);
    // Heuristic: never below the optimum, never above the MST.
    CHECK(t.length() >= brute - 1e-6);
    CHECK(t.length() <= t.mst_length + 1e-12);
    matched += t.length() <= brute + 1e-6 ? 1 : 0;
    check_steiner_points(t);
  }
  // The heuristic should find the optimal topology most of the time.
  MESSAGE("optimal on ", matched, " of 30");
  CHECK(matched >= 27);
}

TEST_CASE("random clusters keep tree shape, length bounds and angle conditions") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> u(0, 50);
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = 3 + static_cast<std::size_t>(i % 4);
    std::vector<Point> pts;
    for (std::size_t j = 0; j < k; ++j) {
      pts.push_back({u(rng), u(rng)});
    }
    const auto t = steiner_tree_cluster(nodes_at(pts));
    CHECK(is_tree(t.points.size(), t.edges));
    CHECK(t.length() <= t.mst_length + 1e-12);
    CHECK(t.length() >= 0.82 * t.mst_length);
    CHECK(t.steiner_count() <= k - 2);
    check_steiner_points(t);
  }
}

TEST_CASE("derive_steiner_node_fields") {
  const std::vector<Node> terms{terminal(0, 0, 0, 2, 0.3), terminal(1, 4, 0, 4, 0.9)};
  const StationFields on = derive_steiner_node_fields({0, 0}, terms);
  CHECK(on.z == 2);
  CHECK(on.s == 0.3);
  const StationFields mid = derive_steiner_node_fields({2, 5}, terms);
  CHECK(mid.z == doctest::Approx(3));
  CHECK(mid.s == doctest::Approx(0.6));

  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(0, 10);
  std::vector<Node> cluster;
  for (int i = 0; i < 6; ++i) {
    cluster.push_back(terminal(i, u(rng), u(rng), u(rng), u(rng) / 10));
  }
  const Point p{u(rng), u(rng)};
  long double wz = 0, ws = 0, w = 0;
  for (const Node& n : cluster) {
    const long double wi = 1.0L / oracle::hp_distance(p.x, p.y, n.x, n.y);
    w += wi;
    wz += wi * n.z;
    ws += wi * n.s;
  }
  const StationFields f = derive_steiner_node_fields(p, cluster);
  CHECK(f.z == doctest::Approx(static_cast<double>(wz / w)).epsilon(1e-12));
  CHECK(f.s == doctest::Approx(static_cast<double>(ws / w)).epsilon(1e-12));

  CHECK_THROWS_AS(derive_steiner_node_fields(p, {}), InvalidInput);
}

TEST_CASE("steinerize with singleton clusters returns the input tree") {
  const Network net = fixtures::random_network(10, 3);
  const EdgeSet tree = [&] {
    EdgeSet t = prim_mst(net, Criterion::Length);
    std::sort(t.begin(), t.end());
    return t;
  }();
  const Partition singles = agglomerate(net, 1);
  const SteinerSolution sol = steinerize(net, tree, singles);
  CHECK(sol.tree == tree);
  CHECK(sol.provenance.empty());
  CHECK(sol.network.size() == net.size());
}

TEST_CASE("steinerize equilateral cluster plus a far bridged terminal") {
  const Network net({terminal(0, 0, 0, 1, 0.2), terminal(1, 1, 0, 2, 0.4), terminal(2, 0.5, kSqrt3 / 2, 3, 0.6),
                     terminal(3, 10, 0, 0, 1.0)},
                    std::nullopt);
  const EdgeSet tree{{0, 1}, {0, 2}, {1, 3}};
  const Partition p{{{0, 1, 2}, {3}}, 6};
  const SteinerSolution sol = steinerize(net, tree, p);

  REQUIRE(sol.provenance.size() == 1);
  const NodeId s = sol.provenance.begin()->first;
  CHECK(s == 4);
  CHECK(sol.provenance.at(s) == 0);
  const EdgeSet expected{{0, 4}, {1, 3}, {1, 4}, {2, 4}};
  CHECK(sol.tree == expected);
  CHECK(is_spanning_tree(sol.network, sol.tree));

  const Node& sn = sol.network.node(s);
  CHECK(sn.kind == NodeKind::Steiner);
  CHECK(sn.x == doctest::Approx(0.5));
  CHECK(sn.y == doctest::Approx(kSqrt3 / 6));
  // Equidistant from the three terminals: plain means.
  CHECK(sn.z == doctest::Approx(2.0));
  CHECK(sn.s == doctest::Approx(0.4));

  const EdgeAttr& a = sol.network.attr({0, 4});
  CHECK(a.length == doctest::Approx(1 / kSqrt3));
  CHECK(a.altitude_gap == doctest::Approx(1.0));
  CHECK(a.qos == doctest::Approx(0.3));
  CHECK(a.cost == doctest::Approx(net.coefficients().alpha * 1.0 + net.coefficients().beta * 0.3));
  CHECK(sol.network.attr({1, 3}).length == doctest::Approx(9));

  REQUIRE(sol.parts.size() == 1);
  CHECK(sol.parts[0].replaced_length == doctest::Approx(2.0));
  CHECK(sol.parts[0].steiner_length == doctest::Approx(kSqrt3));
}

TEST_CASE("steinerize length dominance on random instances") {
  for (unsigned seed = 0; seed < 50; ++seed) {
    const Network net = fixtures::random_network(20 + static_cast<int>(seed % 20), 4000 + seed);
    const auto cfg = ScalarizationConfig::over(net, WeightVector({0.4, 0.3, 0.2, 0.1}), SenseVector::standard());
    for (const EdgeSet& tree : {prim_mst(net, Criterion::Length), multicriteria_prim(net, cfg)}) {
      const Partition part = agglomerate(net, 6);
      const SteinerSolution sol = steinerize(net, tree, part);
      CHECK(is_spanning_tree(sol.network, sol.tree));
      CHECK(tree_objectives(sol.network, sol.tree).length <= tree_objectives(net, tree).length + 1e-9);
      for (const SteinerPart& p : sol.parts) {
        CHECK(p.steiner_length <= p.replaced_length + 1e-9);
        CHECK(p.steiner_length >= 0.82 * p.mst_length);
      }
      for (const auto& [id, cluster] : sol.provenance) {
        CHECK(sol.network.node(id).kind == NodeKind::Steiner);
        CHECK(cluster < part.clusters.size());
      }
      // Every Steiner node has degree three in the tree.
      for (const Node& n : sol.network.nodes()) {
        if (n.kind != NodeKind::Steiner) {
          continue;
        }
        const auto deg = std::count_if(sol.tree.begin(), sol.tree.end(),
                                       [&](const EdgeId& e) { return e.a == n.id || e.b == n.id; });
        CHECK(deg == 3);
      }
    }
  }
}

TEST_CASE("steinerize rejects mismatched inputs") {
  const Network net = fixtures::random_network(6, 8);
  const EdgeSet tree = prim_mst(net, Criterion::Length);
  CHECK_THROWS_AS(steinerize(net, tree, Partition{{{0, 1, 2}}, 6}), InvalidInput);
  EdgeSet short_tree(tree.begin(), tree.end() - 1);
  CHECK_THROWS_AS(steinerize(net, short_tree, agglomerate(net, 6)), InvalidInput);
}
