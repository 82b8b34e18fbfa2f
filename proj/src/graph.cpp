#include "spcoarsen/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace spcoarsen {

double Graph::weight(int i, int j) const {
  auto row = neighbors(i);
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const Neighbor& nb, int target) { return nb.node < target; });
  return (it != row.end() && it->node == j) ? it->weight : 0.0;
}

std::size_t Graph::edge_count() const {
  std::size_t count = 0;
  for (int i = 0; i < node_count(); ++i)
    for (const auto& nb : neighbors(i))
      if (nb.node >= i) ++count;
  return count;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (int i = 0; i < node_count(); ++i)
    for (const auto& nb : neighbors(i))
      if (nb.node >= i) out.push_back({i, nb.node, nb.weight});
  return out;
}

Eigen::MatrixXd Graph::adjacency() const {
  const int n = node_count();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (const auto& nb : neighbors(i)) w(i, nb.node) = nb.weight;
  return w;
}

Graph graph_from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw Error(ErrorKind::BadIndex, "node count must be >= 1, got " + std::to_string(n));

  std::vector<std::vector<Neighbor>> rows(static_cast<std::size_t>(n));
  for (const auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw Error(ErrorKind::BadIndex, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                           ") out of range for " + std::to_string(n) + " nodes");
    if (!std::isfinite(e.w) || e.w < 0.0)
      throw Error(ErrorKind::BadWeight, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                            ") has weight " + std::to_string(e.w));
    if (e.w == 0.0) continue;
    rows[e.u].push_back({e.v, e.w});
    if (e.u != e.v) rows[e.v].push_back({e.u, e.w});
  }

  Graph g;
  g.offsets_.assign(1, 0);
  g.degree_.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    auto& row = rows[i];
    std::stable_sort(row.begin(), row.end(),
                     [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
    for (std::size_t k = 0; k < row.size();) {
      Neighbor merged = row[k];
      for (++k; k < row.size() && row[k].node == merged.node; ++k) merged.weight += row[k].weight;
      g.entries_.push_back(merged);
      g.degree_[i] += merged.weight;
    }
    g.offsets_.push_back(g.entries_.size());
    if (!(g.degree_[i] > 0.0)) throw Error(ErrorKind::IsolatedNode, "node " + std::to_string(i));
  }
  return g;
}

bool is_symmetric(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (!(std::abs(m(i, j) - m(j, i)) <= tol)) return false;
  return true;
}

SymMatrix::SymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (!is_symmetric(m_)) throw Error(ErrorKind::NotSymmetric, "matrix is not symmetric");
}

namespace {

// D^{-1/2} W D^{-1/2}
Eigen::MatrixXd normalized_adjacency(const Graph& g) {
  const int n = g.node_count();
  Eigen::VectorXd inv_sqrt(n);
  for (int i = 0; i < n; ++i) inv_sqrt(i) = 1.0 / std::sqrt(g.degree(i));
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (const auto& nb : g.neighbors(i)) a(i, nb.node) = nb.weight * (inv_sqrt(i) * inv_sqrt(nb.node));
  return a;
}

}  // namespace

SymMatrix normalized_laplacian(const Graph& g) {
  const int n = g.node_count();
  return SymMatrix(Eigen::MatrixXd::Identity(n, n) - normalized_adjacency(g));
}

Eigen::MatrixXd random_walk_laplacian(const Graph& g) {
  const int n = g.node_count();
  Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (const auto& nb : g.neighbors(i)) l(i, nb.node) -= nb.weight / g.degree(i);
  return l;
}

SymMatrix signless_normalized_laplacian(const Graph& g) {
  const int n = g.node_count();
  return SymMatrix(Eigen::MatrixXd::Identity(n, n) + normalized_adjacency(g));
}

Eigen::VectorXd normalized_weight_row(const Graph& g, int i) {
  if (i < 0 || i >= g.node_count()) throw Error(ErrorKind::BadIndex, "node " + std::to_string(i));
  Eigen::VectorXd row = Eigen::VectorXd::Zero(g.node_count());
  for (const auto& nb : g.neighbors(i)) row(nb.node) = nb.weight / g.degree(i);
  return row;
}

}  // namespace spcoarsen
