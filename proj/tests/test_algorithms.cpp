#include <doctest.h>

#include <cmath>

#include "spcoarsen/algorithms.hpp"
#include "spcoarsen/spectral.hpp"
#include "support/errors.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace spcoarsen;
using namespace spcoarsen::testing;

namespace {

// 4-cycle 0-1-2-3-0: {0, 2} and {1, 3} are false twins.
Graph cycle4() { return graph_from_edges(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}}); }

const Partition kTwins({0, 1, 0, 1});

double eps_sum(const CoarsenResult& r) {
  double s = 0.0;
  for (double e : r.diagnostics.merge_eps) s += e;
  return s;
}

}  // namespace

TEST_CASE("node dissimilarity") {
  CHECK(node_dissimilarity(path3(), 0, 2) == 0.0);
  CHECK(node_dissimilarity(path3(), 0, 1) == doctest::Approx(2.0));
  Rng rng(4);
  const Graph g = random_graph(rng, 10, 0.4);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 10; ++j) CHECK(node_dissimilarity(g, i, j) == node_dissimilarity(g, j, i));
  CHECK(kind_of([] { node_dissimilarity(path3(), 0, 3); }) == ErrorKind::BadIndex);
}

TEST_CASE("two-hop candidates") {
  CHECK(two_hop_candidates(path3(), 0) == std::vector<int>{1, 2});
  CHECK(two_hop_candidates(triangle(), 0) == std::vector<int>{1, 2});
  CHECK(two_hop_candidates(star(3), 0) == std::vector<int>{1, 2, 3});
  CHECK(two_hop_candidates(star(3), 1) == std::vector<int>{0, 2, 3});
  const Graph path5 = graph_from_edges(5, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}});
  CHECK(two_hop_candidates(path5, 0) == std::vector<int>{1, 2});
  CHECK(kind_of([] { two_hop_candidates(path3(), -1); }) == ErrorKind::BadIndex);
}

TEST_CASE("merge_pair") {
  for (auto [a, b] : {std::pair{0, 2}, std::pair{2, 0}}) {
    const auto m = merge_pair(path3(), a, b);
    CHECK(m.coarse.node_count() == 2);
    CHECK(m.coarse.weight(0, 1) == 2.0);
    CHECK(m.partition.assignment() == std::vector<int>{0, 1, 0});
  }
  const auto m = merge_pair(cycle4(), 1, 3);
  CHECK(m.partition.assignment() == std::vector<int>{0, 1, 2, 1});
  CHECK(distance_report(cycle4(), m.partition).full < 1e-10);
  CHECK(kind_of([] { merge_pair(path3(), 1, 1); }) == ErrorKind::BadIndex);

  Rng rng(8);
  const Graph g = random_graph(rng, 9, 0.4);
  CHECK(merge_pair(g, 3, 7).coarse.node_count() == 8);
}

TEST_CASE("mgc on P3 and the identity target") {
  const auto r = mgc(path3(), 2);
  CHECK(r.diagnostics.merges == std::vector<std::pair<int, int>>{{0, 2}});
  CHECK(r.diagnostics.merge_eps == std::vector<double>{0.0});
  CHECK(r.coarse.weight(0, 1) == 2.0);
  CHECK(r.partition.assignment() == std::vector<int>{0, 1, 0});

  Rng rng(5);
  const Graph g = random_graph(rng, 8, 0.4);
  const auto id = mgc(g, 8);
  CHECK(id.partition == Partition::identity(8));
  CHECK(id.diagnostics.merges.empty());
  CHECK(id.coarse == g);
}

TEST_CASE("mgc merges both twin pairs with zero distance") {
  const auto r = mgc(cycle4(), 2);
  CHECK(r.partition == kTwins);
  CHECK(eps_sum(r) == 0.0);
  CHECK(distance_report(cycle4(), r.partition).full < 1e-10);
}

TEST_CASE("mgc falls back to global pairs on disconnected graphs") {
  const Graph two_edges = graph_from_edges(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  const auto r = mgc(two_edges, 1);
  CHECK(r.partition.supernode_count() == 1);
  CHECK(r.diagnostics.fallback_merges == 1);
}

TEST_CASE("mgc target validation") {
  CHECK(kind_of([] { mgc(path3(), 0); }) == ErrorKind::TargetTooSmall);
  CHECK(kind_of([] { mgc(path3(), 4); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("mgc follows the brute-force minimal pair at every level") {
  Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = uniform_int(rng, 3, 12);
    const Graph g = random_graph(rng, n, uniform(rng, 0.2, 0.6));
    const int target = uniform_int(rng, 1, n - 1);
    const auto r = mgc(g, target);
    Eigen::MatrixXd w = g.adjacency();
    for (std::size_t level = 0; level < r.diagnostics.merges.size(); ++level) {
      const auto [i, j] = r.diagnostics.merges[level];
      const auto best = brute_min_two_hop_pair(w);
      if (best.i < 0) break;  // fallback level, checked separately
      const double chosen = dense_l1(dense_normalized_rows(w), i, j);
      CHECK(chosen <= best.d + 1e-12);
      CHECK(r.diagnostics.merge_eps[level] == doctest::Approx(chosen).epsilon(1e-12));
      if (level == 0) {
        CHECK(i == best.i);
        CHECK(j == best.j);
      }
      std::vector<int> a(static_cast<std::size_t>(w.rows()));
      for (int x = 0; x < w.rows(); ++x) a[x] = x == j ? i : (x > j ? x - 1 : x);
      w = dense_coarsen(w, a, static_cast<int>(w.rows()) - 1);
    }
  }
}

TEST_CASE("sgc head-size sweep range") {
  // lambda: 0, .5, .9, 1.1, 1.6, 1.8 ; N = 6, n = 3 -> k2 = 3 + k1
  const std::vector<double> lambda{0.0, 0.5, 0.9, 1.1, 1.6, 1.8};
  // lo: k1 = 0 -> lambda[3] = 1.1 >= 1. hi: k1 = 3 -> lambda[2] = .9 <= 1.
  CHECK(sgc_k1_range(lambda, 3) == std::vector<int>{0, 1, 2, 3});
  // n = 1: lo = 0 (lambda[5] >= 1), hi = 1.
  CHECK(sgc_k1_range(lambda, 1) == std::vector<int>{0, 1});
  // Everything below one: only k1 = n keeps k2 = N.
  CHECK(sgc_k1_range({0.0, 0.2, 0.4, 0.6}, 2) == std::vector<int>{2});
  // Everything above one except lambda(1): hi = 1 at most.
  CHECK(sgc_k1_range({0.0, 1.2, 1.4, 1.6}, 2) == std::vector<int>{0, 1});
}

TEST_CASE("sgc recovers twin pairs") {
  const auto r = sgc(cycle4(), 2);
  CHECK(r.partition == kTwins);
  REQUIRE(r.diagnostics.kmeans_cost.has_value());
  CHECK(*r.diagnostics.kmeans_cost <= 1e-10);
  CHECK(distance_report(cycle4(), r.partition).partial <= 1e-6);
}

TEST_CASE("sgc with n = N is the identity") {
  Rng rng(12);
  const Graph g = random_graph(rng, 7, 0.5);
  const auto r = sgc(g, 7);
  CHECK(r.partition.supernode_count() == 7);
  CHECK(*r.diagnostics.kmeans_cost == doctest::Approx(0.0).scale(1.0));
  CHECK(kind_of([&] { sgc(g, 0); }) == ErrorKind::TargetTooSmall);
}

TEST_CASE("spectral coarsening bound whenever the cost is below one") {
  Rng rng(61);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = uniform_int(rng, 6, 20);
    const Graph g = random_graph(rng, n, 0.3);
    const int target = uniform_int(rng, 2, n - 1);
    KMeansConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(trial);
    const auto r = sgc(g, target, cfg);
    const double f = *r.diagnostics.kmeans_cost;
    if (f >= 1.0) continue;
    ++checked;
    const auto report = distance_report(g, r.partition, CoarseLaplacian::Consistent);
    CHECK(report.partial <= sgc_partial_bound(target, f) + 1e-6);
  }
  CHECK(checked > 0);
}

TEST_CASE("edge matching") {
  const auto p3 = edge_matching_coarsen(path3(), 2);
  CHECK(p3.partition.assignment() == std::vector<int>{0, 0, 1});

  const auto single = edge_matching_coarsen(graph_from_edges(2, {{0, 1, 1.0}}), 1);
  CHECK(single.partition.assignment() == std::vector<int>{0, 0});

  Rng rng(3);
  const Graph g = random_graph(rng, 10, 0.4);
  CHECK(edge_matching_coarsen(g, 10).partition == Partition::identity(10));
  for (int target = 1; target < 10; ++target)
    CHECK(edge_matching_coarsen(g, target).partition.supernode_count() == target);
}

TEST_CASE("edge matching prefers the heaviest normalized edge") {
  // Degrees 5, 6, 2, 1; scores (0,1) 5/6, (2,3) 1/2, (1,2) 1/6. One merge allowed.
  const Graph g = graph_from_edges(4, {{0, 1, 5.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  const auto r = edge_matching_coarsen(g, 3);
  CHECK(r.partition.assignment() == std::vector<int>{0, 0, 1, 2});
}

TEST_CASE("spectral clustering on P3 reaches the k-means optimum") {
  const auto r = spectral_clustering_coarsen(path3(), 2);
  CHECK(r.partition.supernode_count() == 2);
  const Spectrum s = eigendecompose(normalized_laplacian(path3()));
  const Eigen::MatrixXd rows = s.vectors.leftCols(2);
  CHECK(*r.diagnostics.kmeans_cost == doctest::Approx(exhaustive_kmeans_cost(rows, 2)).epsilon(1e-12));
  CHECK(spectral_clustering_coarsen(path3(), 3).partition.supernode_count() == 3);
}

TEST_CASE("every method returns a consistent, reproducible coarsening") {
  Rng rng(71);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = uniform_int(rng, 5, 25);
    const Graph g = random_graph(rng, n, 0.3);
    const int target = uniform_int(rng, 1, n);
    for (Method m : {Method::MGC, Method::SGC, Method::EM, Method::SC}) {
      KMeansConfig cfg;
      cfg.seed = 5;
      const auto a = run_method(m, g, target, cfg);
      const auto b = run_method(m, g, target, cfg);
      CHECK(a.method == m);
      CHECK(a.partition.supernode_count() == target);
      CHECK((coarsen(g, a.partition).adjacency() - a.coarse.adjacency()).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(a.partition == b.partition);
      CHECK(a.coarse == b.coarse);
      CHECK(a.diagnostics.merge_eps == b.diagnostics.merge_eps);
    }
  }
}

TEST_CASE("method names") {
  CHECK(parse_method("SGC") == Method::SGC);
  CHECK(to_string(Method::EM) == "em");
  CHECK(kind_of([] { parse_method("metis"); }) == ErrorKind::BadConfig);
}
