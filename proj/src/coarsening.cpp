#include "spcoarsen/coarsening.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

namespace spcoarsen {

Partition::Partition(std::vector<int> assignment) : assignment_(std::move(assignment)) {
  if (assignment_.empty()) throw Error(ErrorKind::SizeMismatch, "partition of zero nodes");
  int max_id = -1;
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    if (assignment_[i] < 0)
      throw Error(ErrorKind::BadIndex, "node " + std::to_string(i) + " has negative supernode id");
    max_id = std::max(max_id, assignment_[i]);
  }
  sizes_.assign(static_cast<std::size_t>(max_id) + 1, 0);
  for (int s : assignment_) ++sizes_[s];
  for (std::size_t s = 0; s < sizes_.size(); ++s)
    if (sizes_[s] == 0) throw Error(ErrorKind::EmptySupernode, "supernode " + std::to_string(s) + " has no nodes");
}

Partition Partition::identity(int node_count) {
  std::vector<int> a(static_cast<std::size_t>(node_count));
  for (int i = 0; i < node_count; ++i) a[i] = i;
  return Partition(std::move(a));
}

Partition Partition::canonical(std::span<const int> labels) {
  std::unordered_map<int, int> relabel;
  std::vector<int> a;
  a.reserve(labels.size());
  for (int label : labels) {
    auto [it, inserted] = relabel.try_emplace(label, static_cast<int>(relabel.size()));
    a.push_back(it->second);
  }
  return Partition(std::move(a));
}

std::vector<std::vector<int>> Partition::members() const {
  std::vector<std::vector<int>> out(sizes_.size());
  for (std::size_t s = 0; s < sizes_.size(); ++s) out[s].reserve(sizes_[s]);
  for (int i = 0; i < node_count(); ++i) out[assignment_[i]].push_back(i);
  return out;
}

Partition Partition::then(const Partition& next) const {
  if (next.node_count() != supernode_count())
    throw Error(ErrorKind::SizeMismatch, "cannot compose: " + std::to_string(supernode_count()) +
                                             " supernodes vs next level of " + std::to_string(next.node_count()));
  std::vector<int> a(assignment_.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = next[assignment_[i]];
  return Partition(std::move(a));
}

Graph coarsen(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count())
    throw Error(ErrorKind::SizeMismatch, "partition covers " + std::to_string(p.node_count()) +
                                             " nodes, graph has " + std::to_string(g.node_count()));
  const int n = p.supernode_count();
  const auto members = p.members();

  // Row accumulator over coarse columns; touched keeps the sparse support.
  std::vector<double> acc(static_cast<std::size_t>(n), 0.0);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> touched;
  std::vector<Edge> edges;
  for (int sp = 0; sp < n; ++sp) {
    touched.clear();
    for (int i : members[sp]) {
      for (const auto& nb : g.neighbors(i)) {
        const int sq = p[nb.node];
        if (sq < sp) continue;
        if (!seen[sq]) {
          seen[sq] = 1;
          touched.push_back(sq);
        }
        acc[sq] += nb.weight;
      }
    }
    std::sort(touched.begin(), touched.end());
    for (int sq : touched) {
      edges.push_back({sp, sq, acc[sq]});
      acc[sq] = 0.0;
      seen[sq] = 0;
    }
  }
  return graph_from_edges(n, edges);
}

Graph lift(const Graph& coarse, const Partition& p) {
  if (coarse.node_count() != p.supernode_count())
    throw Error(ErrorKind::SizeMismatch, "coarse graph has " + std::to_string(coarse.node_count()) +
                                             " nodes, partition has " + std::to_string(p.supernode_count()) +
                                             " supernodes");
  const auto members = p.members();
  const auto& sizes = p.sizes();
  std::vector<Edge> edges;
  for (int i = 0; i < p.node_count(); ++i) {
    const int sp = p[i];
    for (const auto& nb : coarse.neighbors(sp)) {
      const double w = nb.weight / (static_cast<double>(sizes[sp]) * static_cast<double>(sizes[nb.node]));
      for (int j : members[nb.node])
        if (j >= i) edges.push_back({i, j, w});
    }
  }
  return graph_from_edges(p.node_count(), edges);
}

Eigen::MatrixXd partition_indicator(const Partition& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.supernode_count(), p.node_count());
  for (int i = 0; i < p.node_count(); ++i) m(p[i], i) = 1.0;
  return m;
}

Eigen::MatrixXd partition_pseudo_inverse(const Partition& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.node_count(), p.supernode_count());
  for (int i = 0; i < p.node_count(); ++i) m(i, p[i]) = 1.0 / p.sizes()[p[i]];
  return m;
}

Eigen::MatrixXd normalized_coarsening_matrix(const Partition& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.supernode_count(), p.node_count());
  for (int i = 0; i < p.node_count(); ++i) m(p[i], i) = 1.0 / std::sqrt(static_cast<double>(p.sizes()[p[i]]));
  return m;
}

Eigen::MatrixXd projection(const Partition& p) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(p.node_count(), p.node_count());
  const auto members = p.members();
  for (const auto& block : members) {
    const double v = 1.0 / static_cast<double>(block.size());
    for (int i : block)
      for (int j : block) m(i, j) = v;
  }
  return m;
}

Eigen::VectorXd lift_eigenvector(const Eigen::VectorXd& coarse_vector, const Partition& p) {
  if (coarse_vector.size() != p.supernode_count())
    throw Error(ErrorKind::SizeMismatch, "vector of length " + std::to_string(coarse_vector.size()) +
                                             " for " + std::to_string(p.supernode_count()) + " supernodes");
  Eigen::VectorXd out(p.node_count());
  for (int i = 0; i < p.node_count(); ++i)
    out(i) = coarse_vector(p[i]) / std::sqrt(static_cast<double>(p.sizes()[p[i]]));
  return out;
}

SymMatrix consistent_coarse_laplacian(const Graph& g, const Partition& p) {
  if (p.node_count() != g.node_count())
    throw Error(ErrorKind::SizeMismatch, "partition covers " + std::to_string(p.node_count()) +
                                             " nodes, graph has " + std::to_string(g.node_count()));
  const Eigen::MatrixXd c = normalized_coarsening_matrix(p);
  Eigen::MatrixXd lc = c * normalized_laplacian(g).dense() * c.transpose();
  // Congruence is symmetric in exact arithmetic; remove rounding asymmetry.
  lc = 0.5 * (lc + lc.transpose()).eval();
  return SymMatrix(std::move(lc));
}

}  // namespace spcoarsen
