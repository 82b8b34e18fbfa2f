#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spcoarsen/coarsening.hpp"
#include "spcoarsen/graph.hpp"

namespace spcoarsen {

/// Ascending eigenvalues with orthonormal eigenvectors (column i pairs with
/// eigenvalue i). Each eigenvector is signed so that its largest-magnitude
/// entry is positive, ties going to the lowest index.
struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Throws NotSymmetric or NoConvergence.
Spectrum eigendecompose(const Eigen::MatrixXd& a);
Spectrum eigendecompose(const SymMatrix& a);

/// Eigenvalues only, ascending.
Eigen::VectorXd eigenvalues(const SymMatrix& a);

/// Number of coarse eigenvalues strictly below one. Values within 1e-12 of
/// one are counted as >= 1, so the exact ones of the lifted spectrum always
/// land in the middle band.
int head_count(std::span<const double> coarse);

/// Coarse eigenvalues with (N - n) ones inserted after the head band.
std::vector<double> lifted_eigenvalues(std::span<const double> coarse, int node_count);

/// L1 distance between the original spectrum and the lifted coarse one.
double full_spectral_distance(std::span<const double> original, std::span<const double> coarse);

struct PartialDistance {
  double value = 0.0;
  int k1 = 0;
};

/// Head band compared index-by-index, tail band compared against the top of
/// the original spectrum.
PartialDistance partial_spectral_distance(std::span<const double> original, std::span<const double> coarse);

/// Same quantity from only the extremes of the original spectrum: the
/// `smallest` ascending eigenvalues (at least k1 of them) and the `largest`
/// ascending eigenvalues (at least n - k1, ending at the maximum).
PartialDistance partial_spectral_distance_from_extremes(std::span<const double> smallest,
                                                        std::span<const double> largest,
                                                        std::span<const double> coarse);

/// Sum of |lambda(i) - 1| over 1-based i in (k1, k2].
double excluded_band(std::span<const double> original, int k1, int k2);

struct SpectralDistanceReport {
  double full = 0.0;
  double partial = 0.0;
  double excluded_band = 0.0;
  int k1 = 0;
  int k2 = 0;
  int n = 0;
  int N = 0;
  std::vector<double> original_eigenvalues;
  std::vector<double> coarse_eigenvalues;
};

SpectralDistanceReport distance_report(std::span<const double> original, std::span<const double> coarse);

/// Which coarse normalized Laplacian supplies the coarse eigenvalues.
enum class CoarseLaplacian {
  Built,       ///< normalized Laplacian of coarsen(g, p)
  Consistent,  ///< C L C^T
};

SpectralDistanceReport distance_report(const Graph& g, const Partition& p,
                                       CoarseLaplacian which = CoarseLaplacian::Built);

inline std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace spcoarsen
