#pragma once

#include "gsr/graph.hpp"
#include "gsr/linalg.hpp"

namespace gsr {

/// Ascending eigenvalues and orthonormal eigenvectors (column n pairs with
/// eigenvalue n) of a symmetric PSD matrix, typically a Laplacian.
///
/// Within a repeated eigenvalue the basis is arbitrary. Everything built on
/// a Spectrum depends only on the spectral projectors, so callers must not
/// rely on individual eigenvectors of multiple eigenvalues.
struct Spectrum {
  Vector eigenvalues;
  Matrix eigenvectors;

  Index size() const noexcept { return eigenvalues.size(); }
  /// U diag(values) U^T.
  Matrix synthesize(const Vector& values) const;
  /// U_F, the eigenvectors with indices in `band`.
  Matrix band_basis(std::span<const Index> band) const;
};

/// Symmetric eigendecomposition.
///
/// Requires symmetry to 1e-10 and min eigenvalue >= -1e-8 * ||m||. Slightly
/// negative eigenvalues are clamped to 0. Each eigenvector is signed so that
/// its largest-magnitude entry is positive (lowest index wins ties).
Spectrum eigendecompose(const Matrix& m);

/// Graph Fourier transform U^T f.
Vector gft(const Spectrum& spec, const Vector& f);
/// Inverse transform U f_tilde.
Vector igft(const Spectrum& spec, const Vector& f_tilde);

/// f^T L f with L the combinatorial Laplacian of g.
double smoothness(const Graph& g, const Vector& f);

/// Groups ascending eigenvalues whose gap is <= rel_tol * max(1, |lambda_max|).
/// Returns the index of the first member of each group.
std::vector<Index> distinct_eigenvalue_groups(const Vector& ascending, double rel_tol = 1e-8);

/// {0, 1, ..., bandwidth - 1}: the low-pass frequency set of size B.
std::vector<Index> low_pass_band(Index bandwidth);

}  // namespace gsr
