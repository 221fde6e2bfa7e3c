#include "gsr/spectral.hpp"

#include "gsr/error.hpp"

#include <cmath>
#include <numeric>

namespace gsr {

Matrix Spectrum::synthesize(const Vector& values) const {
  if (values.size() != size()) throw Error(Errc::DimensionMismatch, "spectral values size mismatch");
  return eigenvectors * values.asDiagonal() * eigenvectors.transpose();
}

Matrix Spectrum::band_basis(std::span<const Index> band) const {
  for (Index n : band) {
    if (n < 0 || n >= size()) throw Error(Errc::IndexOutOfRange, "band index out of range");
  }
  return linalg::columns(eigenvectors, band);
}

Spectrum eigendecompose(const Matrix& m) {
  linalg::require_symmetric(m, 1e-10, "eigendecompose input");
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  if (es.info() != Eigen::Success) throw Error(Errc::InvalidArgument, "eigensolver failed");

  Spectrum spec{es.eigenvalues(), es.eigenvectors()};
  const Index n = spec.size();
  if (n == 0) return spec;

  const double norm = std::max(std::abs(spec.eigenvalues(0)), std::abs(spec.eigenvalues(n - 1)));
  if (spec.eigenvalues(0) < -1e-8 * std::max(1.0, norm)) {
    throw Error(Errc::NotPSD, "eigendecompose: matrix is not positive semidefinite",
                spec.eigenvalues(0));
  }
  for (Index k = 0; k < n; ++k) {
    if (spec.eigenvalues(k) < 0.0) spec.eigenvalues(k) = 0.0;
  }

  for (Index k = 0; k < n; ++k) {
    auto col = spec.eigenvectors.col(k);
    Index arg = 0;
    double best = -1.0;
    for (Index i = 0; i < n; ++i) {
      // Ties within rounding noise resolve to the lowest index.
      if (std::abs(col(i)) > best + 1e-12) {
        best = std::abs(col(i));
        arg = i;
      }
    }
    if (col(arg) < 0.0) col = -col;
  }
  return spec;
}

Vector gft(const Spectrum& spec, const Vector& f) {
  if (f.size() != spec.size()) throw Error(Errc::DimensionMismatch, "gft: signal size mismatch");
  return spec.eigenvectors.transpose() * f;
}

Vector igft(const Spectrum& spec, const Vector& f_tilde) {
  if (f_tilde.size() != spec.size()) throw Error(Errc::DimensionMismatch, "igft: size mismatch");
  return spec.eigenvectors * f_tilde;
}

double smoothness(const Graph& g, const Vector& f) {
  if (f.size() != g.size()) throw Error(Errc::DimensionMismatch, "smoothness: signal size mismatch");
  return f.dot(laplacian(g) * f);
}

std::vector<Index> distinct_eigenvalue_groups(const Vector& ascending, double rel_tol) {
  std::vector<Index> firsts;
  if (ascending.size() == 0) return firsts;
  const double scale = std::max(1.0, ascending.cwiseAbs().maxCoeff());
  firsts.push_back(0);
  for (Index k = 1; k < ascending.size(); ++k) {
    if (ascending(k) - ascending(k - 1) > rel_tol * scale) firsts.push_back(k);
  }
  return firsts;
}

std::vector<Index> low_pass_band(Index bandwidth) {
  if (bandwidth <= 0) throw Error(Errc::EmptyBand, "bandwidth must be positive");
  std::vector<Index> band(static_cast<std::size_t>(bandwidth));
  std::iota(band.begin(), band.end(), Index{0});
  return band;
}

}  // namespace gsr
