#include "spcoarsen/algorithms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "spcoarsen/rng.hpp"
#include "spcoarsen/spectral.hpp"

namespace spcoarsen {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::MGC: return "mgc";
    case Method::SGC: return "sgc";
    case Method::EM: return "em";
    case Method::SC: return "sc";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "mgc") return Method::MGC;
  if (lower == "sgc") return Method::SGC;
  if (lower == "em") return Method::EM;
  if (lower == "sc") return Method::SC;
  throw Error(ErrorKind::BadConfig, "unknown method '" + std::string(name) + "'");
}

namespace {

void check_node(const Graph& g, int i) {
  if (i < 0 || i >= g.node_count())
    throw Error(ErrorKind::BadIndex, "node " + std::to_string(i) + " outside [0, " + std::to_string(g.node_count()) + ")");
}

void check_target(const Graph& g, int n) {
  if (n < 1) throw Error(ErrorKind::TargetTooSmall, "target size " + std::to_string(n) + " < 1");
  if (n > g.node_count())
    throw Error(ErrorKind::SizeMismatch,
                "target size " + std::to_string(n) + " exceeds node count " + std::to_string(g.node_count()));
}

using Row = std::vector<Neighbor>;

std::vector<Row> normalized_rows(const Graph& g) {
  std::vector<Row> rows(static_cast<std::size_t>(g.node_count()));
  for (int i = 0; i < g.node_count(); ++i) {
    auto nbs = g.neighbors(i);
    rows[i].reserve(nbs.size());
    for (const auto& nb : nbs) rows[i].push_back({nb.node, nb.weight / g.degree(i)});
  }
  return rows;
}

// Sparse L1 distance, summed in ascending coordinate order so the result is
// bit-identical to the dense sum.
double l1_distance(const Row& a, const Row& b) {
  double sum = 0.0;
  std::size_t x = 0, y = 0;
  while (x < a.size() || y < b.size()) {
    if (y == b.size() || (x < a.size() && a[x].node < b[y].node)) {
      sum += std::abs(a[x++].weight);
    } else if (x == a.size() || b[y].node < a[x].node) {
      sum += std::abs(b[y++].weight);
    } else {
      sum += std::abs(a[x++].weight - b[y++].weight);
    }
  }
  return sum;
}

// Marks nodes within two hops of i (i itself excluded) into `mark` using
// `stamp` as the current generation.
void mark_two_hop(const Graph& g, int i, std::vector<int>& mark, int stamp) {
  for (const auto& nb : g.neighbors(i)) {
    if (nb.node != i) mark[nb.node] = stamp;
    for (const auto& nb2 : g.neighbors(nb.node))
      if (nb2.node != i) mark[nb2.node] = stamp;
  }
}

}  // namespace

double node_dissimilarity(const Graph& g, int i, int j) {
  check_node(g, i);
  check_node(g, j);
  const auto rows_i = normalized_weight_row(g, i);
  const auto rows_j = normalized_weight_row(g, j);
  double sum = 0.0;
  for (Eigen::Index k = 0; k < rows_i.size(); ++k) sum += std::abs(rows_i(k) - rows_j(k));
  return sum;
}

std::vector<int> two_hop_candidates(const Graph& g, int i) {
  check_node(g, i);
  std::vector<int> mark(static_cast<std::size_t>(g.node_count()), 0);
  mark_two_hop(g, i, mark, 1);
  std::vector<int> out;
  for (int j = 0; j < g.node_count(); ++j)
    if (mark[j] == 1) out.push_back(j);
  return out;
}

MergeResult merge_pair(const Graph& g, int a, int b) {
  check_node(g, a);
  check_node(g, b);
  if (a == b) throw Error(ErrorKind::BadIndex, "cannot merge node " + std::to_string(a) + " with itself");
  const int lo = std::min(a, b), hi = std::max(a, b);
  std::vector<int> assignment(static_cast<std::size_t>(g.node_count()));
  for (int x = 0; x < g.node_count(); ++x) assignment[x] = x == hi ? lo : (x > hi ? x - 1 : x);
  Partition p(std::move(assignment));
  return {coarsen(g, p), std::move(p)};
}

CoarsenResult mgc(const Graph& g, int n) {
  check_target(g, n);
  CoarsenResult result;
  result.method = Method::MGC;
  result.partition = Partition::identity(g.node_count());
  Graph current = g;

  std::vector<int> mark;
  while (current.node_count() > n) {
    const int s = current.node_count();
    const auto rows = normalized_rows(current);
    mark.assign(static_cast<std::size_t>(s), -1);

    double best = std::numeric_limits<double>::infinity();
    int bi = -1, bj = -1;
    for (int i = 0; i < s; ++i) {
      mark_two_hop(current, i, mark, i);
      for (int j = i + 1; j < s; ++j) {
        if (mark[j] != i) continue;
        const double d = l1_distance(rows[i], rows[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0) {
      // No 2-hop pair left (every supernode is its own component).
      ++result.diagnostics.fallback_merges;
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
          const double d = l1_distance(rows[i], rows[j]);
          if (d < best) {
            best = d;
            bi = i;
            bj = j;
          }
        }
    }
    if (bi < 0) throw Error(ErrorKind::NoCandidates, "no pair to merge at level " + std::to_string(s));

    auto merged = merge_pair(current, bi, bj);
    result.diagnostics.merges.emplace_back(bi, bj);
    result.diagnostics.merge_eps.push_back(best);
    result.partition = result.partition.then(merged.partition);
    current = std::move(merged.coarse);
  }
  result.coarse = std::move(current);
  return result;
}

std::vector<int> sgc_k1_range(const std::vector<double>& lambda, int n) {
  const int N = static_cast<int>(lambda.size());
  if (n < 1 || n > N) throw Error(ErrorKind::SizeMismatch, "target " + std::to_string(n) + " for N = " + std::to_string(N));
  int lo = n;
  for (int k1 = 0; k1 <= n; ++k1) {
    const int k2 = N - n + k1;
    if (k2 == N || lambda[k2] >= 1.0) {
      lo = k1;
      break;
    }
  }
  int hi = 0;
  for (int k1 = n; k1 >= 0; --k1) {
    if (k1 == 0 || lambda[k1 - 1] <= 1.0) {
      hi = k1;
      break;
    }
  }
  std::vector<int> out;
  for (int k1 = lo; k1 <= hi; ++k1) out.push_back(k1);
  if (out.empty()) {
    const int below = static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [](double v) { return v < 1.0; }));
    out.push_back(std::clamp(below - (N - n), 0, n));
  }
  return out;
}

double sgc_partial_bound(int n, double f) { return ((n + 2) * f + 4.0 * std::sqrt(f)) / (1.0 - f); }

CoarsenResult sgc(const Graph& g, int n, const KMeansConfig& cfg) {
  check_target(g, n);
  cfg.validate();
  const int N = g.node_count();
  const Spectrum spectrum = eigendecompose(normalized_laplacian(g));
  const auto lambda = to_std(spectrum.values);

  CoarsenResult result;
  result.method = Method::SGC;
  auto& diag = result.diagnostics;
  diag.k1_sweep = sgc_k1_range(lambda, n);

  KMeansResult best;
  best.cost = std::numeric_limits<double>::infinity();
  for (int k1 : diag.k1_sweep) {
    const int k2 = N - n + k1;
    Eigen::MatrixXd u(N, n);
    u.leftCols(k1) = spectrum.vectors.leftCols(k1);
    u.rightCols(n - k1) = spectrum.vectors.rightCols(N - k2);
    KMeansConfig run_cfg = cfg;
    run_cfg.seed = derive_seed(cfg.seed, {static_cast<std::uint64_t>(k1)});
    KMeansResult km = kmeans(u, n, run_cfg);
    diag.sweep_costs.push_back(km.cost);
    if (km.cost < best.cost) {
      best = std::move(km);
      diag.k1 = k1;
    }
  }
  diag.kmeans_cost = best.cost;
  diag.kmeans_degenerate = best.degenerate;
  result.partition = Partition::canonical(best.assignment);
  result.coarse = coarsen(g, result.partition);
  return result;
}

CoarsenResult spectral_clustering_coarsen(const Graph& g, int n, const KMeansConfig& cfg) {
  check_target(g, n);
  cfg.validate();
  const Spectrum spectrum = eigendecompose(normalized_laplacian(g));
  const Eigen::MatrixXd u = spectrum.vectors.leftCols(n);
  KMeansResult km = kmeans(u, n, cfg);

  CoarsenResult result;
  result.method = Method::SC;
  result.diagnostics.kmeans_cost = km.cost;
  result.diagnostics.kmeans_degenerate = km.degenerate;
  result.partition = Partition::canonical(km.assignment);
  result.coarse = coarsen(g, result.partition);
  return result;
}

CoarsenResult edge_matching_coarsen(const Graph& g, int n) {
  check_target(g, n);
  CoarsenResult result;
  result.method = Method::EM;
  result.partition = Partition::identity(g.node_count());
  Graph current = g;

  struct Candidate {
    double score;
    int i, j;
  };
  while (current.node_count() > n) {
    const int s = current.node_count();
    std::vector<Candidate> candidates;
    for (int i = 0; i < s; ++i)
      for (const auto& nb : current.neighbors(i))
        if (nb.node > i)
          candidates.push_back({nb.weight / std::max(current.degree(i), current.degree(nb.node)), i, nb.node});
    std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.i != b.i) return a.i < b.i;
      return a.j < b.j;
    });

    std::vector<int> mate(static_cast<std::size_t>(s), -1);
    int budget = s - n;
    for (const auto& c : candidates) {
      if (budget == 0) break;
      if (mate[c.i] >= 0 || mate[c.j] >= 0) continue;
      mate[c.i] = c.j;
      mate[c.j] = c.i;
      --budget;
    }
    if (budget == s - n) {
      // Only isolated supernodes remain; merge the first two.
      mate[0] = 1;
      mate[1] = 0;
    }

    std::vector<int> reps(static_cast<std::size_t>(s));
    for (int x = 0; x < s; ++x) reps[x] = mate[x] >= 0 ? std::min(x, mate[x]) : x;
    Partition level = Partition::canonical(reps);
    current = coarsen(current, level);
    result.partition = result.partition.then(level);
    ++result.diagnostics.rounds;
  }
  result.coarse = std::move(current);
  return result;
}

CoarsenResult run_method(Method m, const Graph& g, int n, const KMeansConfig& cfg) {
  switch (m) {
    case Method::MGC: return mgc(g, n);
    case Method::SGC: return sgc(g, n, cfg);
    case Method::EM: return edge_matching_coarsen(g, n);
    case Method::SC: return spectral_clustering_coarsen(g, n, cfg);
  }
  throw Error(ErrorKind::BadConfig, "unknown method");
}

}  // namespace spcoarsen
