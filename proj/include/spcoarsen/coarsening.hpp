#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spcoarsen/graph.hpp"

namespace spcoarsen {

/// Surjective assignment of N nodes onto n supernodes.
class Partition {
 public:
  /// Throws EmptySupernode if some id in [0, max id] is unused, BadIndex on
  /// negative ids.
  explicit Partition(std::vector<int> assignment);

  static Partition identity(int node_count);

  /// Relabels supernodes in order of first appearance; any labels accepted.
  static Partition canonical(std::span<const int> labels);

  int node_count() const { return static_cast<int>(assignment_.size()); }
  int supernode_count() const { return static_cast<int>(sizes_.size()); }
  int operator[](int node) const { return assignment_[node]; }
  const std::vector<int>& assignment() const { return assignment_; }
  const std::vector<int>& sizes() const { return sizes_; }

  /// Nodes of each supernode, ascending.
  std::vector<std::vector<int>> members() const;

  /// Maps supernodes of this partition through a partition of the coarse
  /// level: result[i] = next[this[i]].
  Partition then(const Partition& next) const;

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> assignment_;
  std::vector<int> sizes_;
};

/// W_c = P W P^T. A within-supernode edge {i, j} contributes 2 W(i, j) to
/// the supernode's self-loop; original self-loops contribute once.
Graph coarsen(const Graph& g, const Partition& p);

/// W_l(i, j) = W_c(p, q) / (|S_p| |S_q|).
Graph lift(const Graph& coarse, const Partition& p);

/// P, the n x N 0/1 indicator matrix.
Eigen::MatrixXd partition_indicator(const Partition& p);

/// P^+, the N x n pseudo-inverse of P.
Eigen::MatrixXd partition_pseudo_inverse(const Partition& p);

/// C with C(p, i) = 1/sqrt(|S_p|) for i in S_p. Rows are orthonormal.
Eigen::MatrixXd normalized_coarsening_matrix(const Partition& p);

/// Projection onto block-constant vectors, P^+ P = C^T C.
Eigen::MatrixXd projection(const Partition& p);

/// C^T u_c.
Eigen::VectorXd lift_eigenvector(const Eigen::VectorXd& coarse_vector, const Partition& p);

/// C L C^T, with L the normalized Laplacian of g.
SymMatrix consistent_coarse_laplacian(const Graph& g, const Partition& p);

}  // namespace spcoarsen
