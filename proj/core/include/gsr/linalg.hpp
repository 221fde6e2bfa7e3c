#pragma once

#include <Eigen/Dense>

#include <span>
#include <string_view>
#include <vector>

namespace gsr {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

namespace linalg {

/// Largest absolute asymmetry |m(i,j) - m(j,i)|.
double asymmetry(const Matrix& m);

/// Throws NotSymmetric when the asymmetry exceeds tol * max(1, max|m|).
void require_symmetric(const Matrix& m, double tol, std::string_view what);

/// Smallest eigenvalue of a symmetric matrix (eigenvalues only).
double min_eigenvalue(const Matrix& m);

/// Throws NotPSD when min eigenvalue < -tol * max(1, spectral norm).
void require_psd(const Matrix& m, double tol, std::string_view what);

/// Solves A x = b for symmetric A. Uses LDLT; falls back to the
/// eigendecomposition pseudo-inverse (relative cutoff `pinv_tol`) when the
/// factorization reports rcond below `pinv_tol`.
Vector solve_symmetric(const Matrix& a, const Vector& b, double pinv_tol = 1e-12);

/// Moore-Penrose pseudo-inverse of a symmetric matrix with relative cutoff.
Matrix pinv_symmetric(const Matrix& a, double rel_tol = 1e-12);

/// Symmetric PSD square root; eigenvalues in [-clamp, 0) are set to 0.
Matrix sqrt_psd(const Matrix& a, double clamp = 1e-10);

/// Pseudo-inverse of the symmetric PSD square root, relative cutoff `rel_tol`.
Matrix pinv_sqrt_psd(const Matrix& a, double rel_tol = 1e-10);

/// Principal submatrix m(idx, idx).
Matrix principal(const Matrix& m, std::span<const Index> idx);

/// Columns m(:, idx).
Matrix columns(const Matrix& m, std::span<const Index> idx);

/// Scatter an S-vector into an N-vector at `idx` (i.e. Psi^T v).
Vector scatter(std::span<const Index> idx, const Vector& v, Index n);

/// Gather v(idx) (i.e. Psi v).
Vector gather(const Vector& v, std::span<const Index> idx);

/// 2-norm condition number of a symmetric PSD matrix (inf when singular).
double condition_psd(const Matrix& m);

}  // namespace linalg
}  // namespace gsr
