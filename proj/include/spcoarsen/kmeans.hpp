#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace spcoarsen {

struct KMeansConfig {
  int restarts = 10;
  int max_iters = 100;
  double rel_tol = 1e-9;
  std::uint64_t seed = 0;

  /// Throws BadConfig unless every field is positive.
  void validate() const;
};

struct KMeansResult {
  std::vector<int> assignment;  ///< cluster id per row, every id in [0, k) used
  double cost = 0.0;            ///< sum of squared distances to cluster means
  double init_cost = 0.0;       ///< cost right after seeding, winning restart
  std::vector<double> cost_trace;  ///< cost after each improvement step, winning restart
  int restart = 0;              ///< index of the winning restart
  bool degenerate = false;      ///< k exceeded the number of distinct rows
};

/// Best of `cfg.restarts` k-means++ seeded runs. Each run alternates Lloyd
/// passes with single-point transfers until the cost stops decreasing.
/// Restart r draws from the stream derive_seed(cfg.seed, {r}).
KMeansResult kmeans(const Eigen::MatrixXd& rows, int k, const KMeansConfig& cfg);

/// Exact k-means cost of an assignment.
double kmeans_cost(const Eigen::MatrixXd& rows, const std::vector<int>& assignment, int k);

}  // namespace spcoarsen
