#pragma once

#include <cstdint>
#include <vector>

#include "spcoarsen/algorithms.hpp"
#include "spcoarsen/coarsening.hpp"
#include "spcoarsen/sbm.hpp"

namespace spcoarsen {

/// Mutual information over the mean entropy, natural log. Two single-block
/// partitions score 1; if exactly one is single-block the score is 0.
double nmi(const Partition& a, const Partition& b);

struct RecoveryRow {
  BlockKind kind = BlockKind::Associative;
  double p = 0.0;
  double q = 0.0;
  Method method = Method::SGC;
  double mean_nmi = 0.0;  ///< NaN if any repeat failed
  double std_nmi = 0.0;   ///< population standard deviation
  int seeds = 0;
  std::vector<double> scores;
};

struct RecoveryOptions {
  int repeats = 10;
  std::uint64_t base_seed = 0;
  int jobs = 1;
  KMeansConfig kmeans;
};

/// Samples `repeats` graphs per configuration (seed derived from base seed,
/// configuration index and repeat index; the config's own seed is ignored),
/// coarsens each with every method to K supernodes and scores NMI against
/// the ground truth. Rows come out config-major, then in method order.
std::vector<RecoveryRow> recovery_experiment(const std::vector<SBMConfig>& grid, const std::vector<Method>& methods,
                                             const RecoveryOptions& options);

/// The 3 x 3 grid of (p, q) settings and block kinds with K equal blocks.
std::vector<SBMConfig> default_recovery_grid(int node_count, int blocks);

}  // namespace spcoarsen
