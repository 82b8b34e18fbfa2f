#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spcoarsen/coarsening.hpp"
#include "spcoarsen/graph.hpp"

namespace spcoarsen {

enum class BlockKind { Associative, Dissortative, Mixed };

std::string_view to_string(BlockKind k);
/// "associative" (or "assortative"), "dissortative" (or "dissociative"),
/// "mixed". Throws BadConfig.
BlockKind parse_block_kind(std::string_view name);

struct SBMConfig {
  BlockKind kind = BlockKind::Associative;
  double p = 0.5;
  double q = 0.1;
  std::vector<int> block_sizes;
  std::uint64_t seed = 0;

  int node_count() const;
  /// Throws BadConfig: probabilities outside [0, 1], no blocks or a
  /// non-positive block size, or q > p for associative/dissortative.
  void validate() const;
};

/// K x K edge probabilities. Mixed draws each upper-triangular entry
/// (diagonal included) as p or q with probability 1/2.
Eigen::MatrixXd build_block_matrix(const SBMConfig& cfg);

struct SBMSample {
  Graph graph;
  Partition truth;
  int attempts = 1;
};

/// Unit-weight simple graph. Node labels are a seeded random permutation of
/// the block layout, so block membership is not encoded in node order.
/// Samples with an isolated node are redrawn with the next attempt's stream,
/// up to 100 attempts (DegenerateSample).
SBMSample sample_sbm(const SBMConfig& cfg);

}  // namespace spcoarsen
