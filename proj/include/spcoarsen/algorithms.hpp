#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "spcoarsen/coarsening.hpp"
#include "spcoarsen/graph.hpp"
#include "spcoarsen/kmeans.hpp"

namespace spcoarsen {

enum class Method { MGC, SGC, EM, SC };

std::string_view to_string(Method m);
/// Accepts "mgc", "sgc", "em", "sc" in any case. Throws BadConfig.
Method parse_method(std::string_view name);

struct CoarsenDiagnostics {
  // Multilevel: merged pair (in the ids of the level it was merged at) and
  // its dissimilarity, one entry per level.
  std::vector<std::pair<int, int>> merges;
  std::vector<double> merge_eps;
  int fallback_merges = 0;  ///< levels where no 2-hop candidate existed

  // Spectral coarsening and spectral clustering.
  std::optional<int> k1;
  std::optional<double> kmeans_cost;
  std::vector<int> k1_sweep;
  std::vector<double> sweep_costs;
  bool kmeans_degenerate = false;

  // Edge matching.
  int rounds = 0;
};

struct CoarsenResult {
  Method method = Method::MGC;
  Partition partition = Partition::identity(1);
  Graph coarse;
  CoarsenDiagnostics diagnostics;
};

/// || w(i)/d(i) - w(j)/d(j) ||_1 over all N coordinates, i and j included.
/// Terms are accumulated in ascending coordinate order.
double node_dissimilarity(const Graph& g, int i, int j);

/// Nodes other than i reachable by at most two edges, ascending.
std::vector<int> two_hop_candidates(const Graph& g, int i);

struct MergeResult {
  Graph coarse;
  Partition partition;
};

/// Fuses a and b; the fused supernode takes min(a, b)'s rank and the other
/// nodes keep their relative order.
MergeResult merge_pair(const Graph& g, int a, int b);

/// Multilevel coarsening: merge the most similar 2-hop pair until n nodes
/// remain. Ties go to the lexicographically smallest pair.
CoarsenResult mgc(const Graph& g, int n);

/// Spectral coarsening: k-means on head+tail eigenvector blocks, swept over
/// the admissible head sizes, keeping the lowest cost.
CoarsenResult sgc(const Graph& g, int n, const KMeansConfig& cfg = {});

/// Admissible head sizes for the spectral coarsening sweep, given the
/// ascending original spectrum.
std::vector<int> sgc_k1_range(const std::vector<double>& eigenvalues, int n);

/// Right-hand side of the spectral coarsening bound for k-means cost f < 1.
double sgc_partial_bound(int n, double f);

/// Greedy heavy-edge matching with score W(i, j) / max(d(i), d(j)).
CoarsenResult edge_matching_coarsen(const Graph& g, int n);

/// k-means on the first n eigenvectors of the normalized Laplacian.
CoarsenResult spectral_clustering_coarsen(const Graph& g, int n, const KMeansConfig& cfg = {});

CoarsenResult run_method(Method m, const Graph& g, int n, const KMeansConfig& cfg = {});

}  // namespace spcoarsen
