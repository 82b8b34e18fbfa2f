#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spcoarsen/error.hpp"

namespace spcoarsen {

/// One weighted edge (u, v, w). Self-loops have u == v.
struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

struct Neighbor {
  int node = 0;
  double weight = 0.0;

  bool operator==(const Neighbor&) const = default;
};

/// Weighted undirected graph with strictly positive weights and no isolated
/// nodes. Adjacency is stored in CSR form with each row sorted by node id; a
/// self-loop appears once in its row and counts once toward the degree.
class Graph {
 public:
  int node_count() const { return static_cast<int>(offsets_.size()) - 1; }

  std::span<const Neighbor> neighbors(int i) const {
    return {entries_.data() + offsets_[i], entries_.data() + offsets_[i + 1]};
  }

  double degree(int i) const { return degree_[i]; }
  const std::vector<double>& degrees() const { return degree_; }

  /// W(i, j), zero when absent.
  double weight(int i, int j) const;

  /// Undirected edge count, self-loops included.
  std::size_t edge_count() const;

  /// Edges with u <= v, ordered by (u, v).
  std::vector<Edge> edges() const;

  Eigen::MatrixXd adjacency() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph graph_from_edges(int n, std::span<const Edge> edges);

  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> entries_;
  std::vector<double> degree_;
};

/// Builds a graph from undirected triples. Duplicate (u, v) and (v, u)
/// triples are summed.
///
/// Throws BadIndex, BadWeight or IsolatedNode.
Graph graph_from_edges(int n, std::span<const Edge> edges);

inline Graph graph_from_edges(int n, std::initializer_list<Edge> edges) {
  return graph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Dense symmetric matrix. Construction checks symmetry.
class SymMatrix {
 public:
  static constexpr double kSymmetryTol = 1e-12;

  explicit SymMatrix(Eigen::MatrixXd m);

  Eigen::Index order() const { return m_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  const Eigen::MatrixXd& dense() const { return m_; }

 private:
  Eigen::MatrixXd m_;
};

bool is_symmetric(const Eigen::MatrixXd& m, double tol = SymMatrix::kSymmetryTol);

/// I - D^{-1/2} W D^{-1/2}
SymMatrix normalized_laplacian(const Graph& g);

/// I - D^{-1} W. Not symmetric in general; similar to the normalized form.
Eigen::MatrixXd random_walk_laplacian(const Graph& g);

/// I + D^{-1/2} W D^{-1/2}
SymMatrix signless_normalized_laplacian(const Graph& g);

/// Row i of D^{-1} W as a dense vector.
Eigen::VectorXd normalized_weight_row(const Graph& g, int i);

}  // namespace spcoarsen
