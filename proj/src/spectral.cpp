#include "spcoarsen/spectral.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace spcoarsen {

namespace {

void check_sizes(std::size_t big, std::size_t small) {
  if (small > big)
    throw Error(ErrorKind::SizeMismatch, "coarse spectrum of size " + std::to_string(small) +
                                             " exceeds original size " + std::to_string(big));
}

}  // namespace

Spectrum eigendecompose(const Eigen::MatrixXd& a) {
  if (!is_symmetric(a)) throw Error(ErrorKind::NotSymmetric, "eigendecompose needs a symmetric matrix");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::NoConvergence, "symmetric eigensolver did not converge");
  Spectrum s{solver.eigenvalues(), solver.eigenvectors()};
  for (Eigen::Index c = 0; c < s.vectors.cols(); ++c) {
    Eigen::Index arg = 0;
    double best = -1.0;
    for (Eigen::Index r = 0; r < s.vectors.rows(); ++r) {
      const double m = std::abs(s.vectors(r, c));
      if (m > best) {
        best = m;
        arg = r;
      }
    }
    if (s.vectors(arg, c) < 0.0) s.vectors.col(c) *= -1.0;
  }
  return s;
}

Spectrum eigendecompose(const SymMatrix& a) { return eigendecompose(a.dense()); }

Eigen::VectorXd eigenvalues(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.dense(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorKind::NoConvergence, "symmetric eigensolver did not converge");
  return solver.eigenvalues();
}

int head_count(std::span<const double> coarse) {
  constexpr double kOneBand = 1e-12;
  int k = 0;
  for (double v : coarse) {
    if (v < 1.0 - kOneBand) ++k;
  }
  return k;
}

std::vector<double> lifted_eigenvalues(std::span<const double> coarse, int node_count) {
  const auto n = coarse.size();
  check_sizes(static_cast<std::size_t>(node_count), n);
  const int k1 = head_count(coarse);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(node_count));
  out.insert(out.end(), coarse.begin(), coarse.begin() + k1);
  out.insert(out.end(), static_cast<std::size_t>(node_count) - n, 1.0);
  out.insert(out.end(), coarse.begin() + k1, coarse.end());
  return out;
}

double full_spectral_distance(std::span<const double> original, std::span<const double> coarse) {
  const auto lifted = lifted_eigenvalues(coarse, static_cast<int>(original.size()));
  double sum = 0.0;
  for (std::size_t i = 0; i < original.size(); ++i) sum += std::abs(original[i] - lifted[i]);
  return sum;
}

PartialDistance partial_spectral_distance(std::span<const double> original, std::span<const double> coarse) {
  check_sizes(original.size(), coarse.size());
  const std::size_t shift = original.size() - coarse.size();
  PartialDistance out;
  out.k1 = head_count(coarse);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    const double ref = i < static_cast<std::size_t>(out.k1) ? original[i] : original[i + shift];
    out.value += std::abs(coarse[i] - ref);
  }
  return out;
}

PartialDistance partial_spectral_distance_from_extremes(std::span<const double> smallest,
                                                        std::span<const double> largest,
                                                        std::span<const double> coarse) {
  PartialDistance out;
  out.k1 = head_count(coarse);
  const std::size_t k = static_cast<std::size_t>(out.k1);
  const std::size_t tail = coarse.size() - k;
  if (smallest.size() < k || largest.size() < tail)
    throw Error(ErrorKind::SizeMismatch, "need " + std::to_string(k) + " smallest and " + std::to_string(tail) +
                                             " largest eigenvalues");
  for (std::size_t i = 0; i < k; ++i) out.value += std::abs(coarse[i] - smallest[i]);
  const std::size_t offset = largest.size() - tail;
  for (std::size_t i = 0; i < tail; ++i) out.value += std::abs(coarse[k + i] - largest[offset + i]);
  return out;
}

double excluded_band(std::span<const double> original, int k1, int k2) {
  if (k1 < 0 || k1 > k2 || static_cast<std::size_t>(k2) > original.size())
    throw Error(ErrorKind::BadIndex, "band (" + std::to_string(k1) + ", " + std::to_string(k2) + "] outside [0, " +
                                         std::to_string(original.size()) + "]");
  double sum = 0.0;
  for (int i = k1; i < k2; ++i) sum += std::abs(original[i] - 1.0);
  return sum;
}

SpectralDistanceReport distance_report(std::span<const double> original, std::span<const double> coarse) {
  SpectralDistanceReport r;
  r.N = static_cast<int>(original.size());
  r.n = static_cast<int>(coarse.size());
  r.full = full_spectral_distance(original, coarse);
  const auto partial = partial_spectral_distance(original, coarse);
  r.partial = partial.value;
  r.k1 = partial.k1;
  r.k2 = r.N - r.n + r.k1;
  r.excluded_band = excluded_band(original, r.k1, r.k2);
  r.original_eigenvalues.assign(original.begin(), original.end());
  r.coarse_eigenvalues.assign(coarse.begin(), coarse.end());
  return r;
}

SpectralDistanceReport distance_report(const Graph& g, const Partition& p, CoarseLaplacian which) {
  const auto original = to_std(eigenvalues(normalized_laplacian(g)));
  const auto coarse = which == CoarseLaplacian::Built ? to_std(eigenvalues(normalized_laplacian(coarsen(g, p))))
                                                      : to_std(eigenvalues(consistent_coarse_laplacian(g, p)));
  return distance_report(original, coarse);
}

}  // namespace spcoarsen
