#include "spcoarsen/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spcoarsen/error.hpp"
#include "spcoarsen/rng.hpp"

namespace spcoarsen {

void KMeansConfig::validate() const {
  if (restarts < 1) throw Error(ErrorKind::BadConfig, "restarts must be >= 1");
  if (max_iters < 1) throw Error(ErrorKind::BadConfig, "max_iters must be >= 1");
  if (!(rel_tol > 0.0)) throw Error(ErrorKind::BadConfig, "rel_tol must be > 0");
}

double kmeans_cost(const Eigen::MatrixXd& rows, const std::vector<int>& assignment, int k) {
  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, rows.cols());
  std::vector<int> counts(static_cast<std::size_t>(k), 0);
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    sums.row(assignment[i]) += rows.row(i);
    ++counts[assignment[i]];
  }
  double cost = 0.0;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    const int c = assignment[i];
    cost += (rows.row(i) - sums.row(c) / counts[c]).squaredNorm();
  }
  return cost;
}

namespace {

struct Run {
  std::vector<int> assignment;
  double cost = 0.0;
  double init_cost = 0.0;
  std::vector<double> trace;
};

class Lloyd {
 public:
  Lloyd(const Eigen::MatrixXd& rows, int k) : rows_(rows), k_(k), n_(static_cast<int>(rows.rows())) {}

  // k-means++: first center uniform, then proportional to squared distance
  // to the nearest chosen center. If every remaining distance is zero the
  // lowest unchosen row is taken.
  Eigen::MatrixXd seed(Rng& rng) const {
    Eigen::MatrixXd centers(k_, rows_.cols());
    std::vector<char> chosen(static_cast<std::size_t>(n_), 0);
    int first = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(n_)));
    centers.row(0) = rows_.row(first);
    chosen[first] = 1;
    std::vector<double> d2(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) d2[i] = (rows_.row(i) - centers.row(0)).squaredNorm();
    for (int c = 1; c < k_; ++c) {
      double total = 0.0;
      for (int i = 0; i < n_; ++i) total += d2[i];
      int pick = -1;
      if (total > 0.0) {
        const double target = uniform01(rng) * total;
        double run = 0.0;
        for (int i = 0; i < n_; ++i) {
          run += d2[i];
          if (d2[i] > 0.0 && run > target) {
            pick = i;
            break;
          }
        }
        if (pick < 0) {
          for (int i = n_ - 1; i >= 0; --i)
            if (d2[i] > 0.0) {
              pick = i;
              break;
            }
        }
      } else {
        for (int i = 0; i < n_; ++i)
          if (!chosen[i]) {
            pick = i;
            break;
          }
      }
      chosen[pick] = 1;
      centers.row(c) = rows_.row(pick);
      for (int i = 0; i < n_; ++i) d2[i] = std::min(d2[i], (rows_.row(i) - centers.row(c)).squaredNorm());
    }
    return centers;
  }

  // Nearest center, ties to the lowest center id.
  void assign(const Eigen::MatrixXd& centers, std::vector<int>& assignment) const {
    for (int i = 0; i < n_; ++i) {
      int best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k_; ++c) {
        const double d = (rows_.row(i) - centers.row(c)).squaredNorm();
        if (d < best_d) {
          best_d = d;
          best = c;
        }
      }
      assignment[i] = best;
    }
  }

  // Fills empty clusters by moving in the point farthest from its own
  // centroid, taken only from clusters with at least two points.
  void repair_empty(std::vector<int>& assignment) const {
    for (;;) {
      std::vector<int> counts(static_cast<std::size_t>(k_), 0);
      for (int c : assignment) ++counts[c];
      const auto empty = std::find(counts.begin(), counts.end(), 0);
      if (empty == counts.end()) return;
      const Eigen::MatrixXd means = centroids(assignment, counts);
      int far = -1;
      double far_d = -1.0;
      for (int i = 0; i < n_; ++i) {
        if (counts[assignment[i]] < 2) continue;
        const double d = (rows_.row(i) - means.row(assignment[i])).squaredNorm();
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      assignment[far] = static_cast<int>(empty - counts.begin());
    }
  }

  Eigen::MatrixXd centroids(const std::vector<int>& assignment, const std::vector<int>& counts) const {
    Eigen::MatrixXd means = Eigen::MatrixXd::Zero(k_, rows_.cols());
    for (int i = 0; i < n_; ++i) means.row(assignment[i]) += rows_.row(i);
    for (int c = 0; c < k_; ++c)
      if (counts[c] > 0) means.row(c) /= counts[c];
    return means;
  }

  // One pass of single-point transfers: a point moves from A to B when
  // |B|/(|B|+1) |x - m_B|^2 < |A|/(|A|-1) |x - m_A|^2. Returns true if any
  // point moved.
  bool transfer_pass(std::vector<int>& assignment) const {
    std::vector<int> counts(static_cast<std::size_t>(k_), 0);
    for (int c : assignment) ++counts[c];
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k_, rows_.cols());
    for (int i = 0; i < n_; ++i) sums.row(assignment[i]) += rows_.row(i);
    bool moved = false;
    for (int i = 0; i < n_; ++i) {
      const int a = assignment[i];
      if (counts[a] < 2) continue;
      const double na = counts[a];
      const double remove_gain = na / (na - 1.0) * (rows_.row(i) - sums.row(a) / na).squaredNorm();
      int best = a;
      double best_add = remove_gain;
      for (int b = 0; b < k_; ++b) {
        if (b == a) continue;
        const double nb = counts[b];
        const double add = nb / (nb + 1.0) * (rows_.row(i) - sums.row(b) / nb).squaredNorm();
        // Relative margin keeps rounding noise from cycling points.
        if (add < best_add - 1e-12 * std::max(1.0, remove_gain)) {
          best_add = add;
          best = b;
        }
      }
      if (best != a) {
        sums.row(a) -= rows_.row(i);
        sums.row(best) += rows_.row(i);
        --counts[a];
        ++counts[best];
        assignment[i] = best;
        moved = true;
      }
    }
    return moved;
  }

  Run run(Rng& rng, int max_iters, double rel_tol) const {
    Run r;
    r.assignment.assign(static_cast<std::size_t>(n_), 0);
    assign(seed(rng), r.assignment);
    repair_empty(r.assignment);
    r.cost = kmeans_cost(rows_, r.assignment, k_);
    r.init_cost = r.cost;
    r.trace.push_back(r.cost);
    for (int it = 0; it < max_iters; ++it) {
      std::vector<int> next = r.assignment;
      std::vector<int> counts(static_cast<std::size_t>(k_), 0);
      for (int c : next) ++counts[c];
      assign(centroids(next, counts), next);
      repair_empty(next);
      transfer_pass(next);
      const double cost = kmeans_cost(rows_, next, k_);
      if (!(cost < r.cost)) break;
      const double improvement = r.cost - cost;
      r.assignment = std::move(next);
      r.cost = cost;
      r.trace.push_back(cost);
      if (improvement <= rel_tol * r.cost) break;
    }
    return r;
  }

 private:
  const Eigen::MatrixXd& rows_;
  int k_;
  int n_;
};

bool too_few_distinct(const Eigen::MatrixXd& rows, int k) {
  std::vector<Eigen::Index> distinct;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    bool dup = false;
    for (auto j : distinct)
      if (rows.row(i) == rows.row(j)) {
        dup = true;
        break;
      }
    if (!dup) {
      distinct.push_back(i);
      if (static_cast<int>(distinct.size()) >= k) return false;
    }
  }
  return true;
}

}  // namespace

KMeansResult kmeans(const Eigen::MatrixXd& rows, int k, const KMeansConfig& cfg) {
  cfg.validate();
  const int n = static_cast<int>(rows.rows());
  if (k < 1 || k > n)
    throw Error(ErrorKind::BadConfig, "k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");

  const Lloyd lloyd(rows, k);
  KMeansResult best;
  best.cost = std::numeric_limits<double>::infinity();
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(derive_seed(cfg.seed, {static_cast<std::uint64_t>(r)}));
    Run run = lloyd.run(rng, cfg.max_iters, cfg.rel_tol);
    if (run.cost < best.cost) {
      best.assignment = std::move(run.assignment);
      best.cost = run.cost;
      best.init_cost = run.init_cost;
      best.cost_trace = std::move(run.trace);
      best.restart = r;
    }
  }
  best.degenerate = too_few_distinct(rows, k);
  return best;
}

}  // namespace spcoarsen
