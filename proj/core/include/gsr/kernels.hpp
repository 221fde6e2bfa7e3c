#pragma once

#include "gsr/graph.hpp"
#include "gsr/linalg.hpp"
#include "gsr/spectral.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace gsr {

// Spectral weighting functions r(lambda). A Laplacian kernel uses the
// reciprocal r^dagger, so an increasing r penalizes high graph frequencies.

/// r(lambda) = exp(sigma2 * lambda / 2)
struct Diffusion {
  double sigma2;
};
/// r(lambda) = (a - lambda)^(-p), a >= 2
struct PStepRandomWalk {
  double a;
  int p;
};
/// r(lambda) = 1 + sigma2 * lambda
struct LaplacianRegularization {
  double sigma2;
};
/// r = 1/beta on the frequency indices in `band`, beta elsewhere.
struct Bandlimited {
  std::vector<Index> band;
  double beta;
};
/// r given per frequency index.
struct Table {
  Vector values;
};

using SpectralFunction =
    std::variant<Diffusion, PStepRandomWalk, LaplacianRegularization, Bandlimited, Table>;

/// r at frequency index n with eigenvalue lambda. Throws InvalidArgument for
/// out-of-domain parameters.
double evaluate(const SpectralFunction& r, Index n, double lambda);
/// r on every eigenvalue of an ascending spectrum.
Vector evaluate(const SpectralFunction& r, const Vector& eigenvalues);
/// True for Bandlimited and Table, whose values depend on the index rather
/// than on lambda alone.
bool is_index_based(const SpectralFunction& r);
std::string describe(const SpectralFunction& r);

/// r^dagger: 1/r unless r is zero or below 1e-12 * max(finite r), then 0. An overflowed
/// r = +inf maps to 0. Throws NegativeSpectralValue when any r is negative or NaN.
Vector pseudo_reciprocal(const Vector& r);

/// Kernel eigenvalues r^dagger(lambda_n) for a Laplacian kernel. Table values
/// go through pseudo_reciprocal. The analytic families (and Bandlimited) are
/// positive by construction and use the exact reciprocal, +inf mapping to 0;
/// a relative cutoff there would discard the dominant low frequencies once
/// r spans more than 12 decades.
Vector kernel_spectrum(const SpectralFunction& r, const Vector& eigenvalues);

/// Symmetric PSD N x N similarity matrix with a provenance tag.
class KernelMatrix {
 public:
  /// Checks symmetry (1e-10) and min eigenvalue >= -1e-8 * ||K||.
  KernelMatrix(Matrix matrix, std::string provenance);

  /// Skips the eigenvalue check. For matrices that are PSD by construction
  /// (U diag(r) U^T with r >= 0, positive rescalings); symmetry is still checked.
  static KernelMatrix psd_by_construction(Matrix matrix, std::string provenance);

  const Matrix& matrix() const noexcept { return matrix_; }
  const std::string& provenance() const noexcept { return provenance_; }
  Index size() const noexcept { return matrix_.rows(); }

 private:
  struct Unchecked {};
  KernelMatrix(Matrix matrix, std::string provenance, Unchecked);

  Matrix matrix_;
  std::string provenance_;
};

/// Symmetric positive definite K^{-1} (or K^dagger + eps I).
class InverseKernel {
 public:
  InverseKernel(Matrix inv_matrix, std::string provenance);

  const Matrix& matrix() const noexcept { return inv_matrix_; }
  const std::string& provenance() const noexcept { return provenance_; }
  Index size() const noexcept { return inv_matrix_.rows(); }

 private:
  Matrix inv_matrix_;
  std::string provenance_;
};

/// K = U r^dagger(Lambda) U^T.
KernelMatrix laplacian_kernel(const Spectrum& spec, const SpectralFunction& r);

/// Laplacian kernel with r^dagger = beta on `band` and 1/beta off it.
KernelMatrix bandlimited_kernel(const Spectrum& spec, std::span<const Index> band, double beta);

/// Covariance matrix used verbatim as a kernel.
KernelMatrix covariance_kernel(const Matrix& c);

/// [(I - W)^T (I - W)]^{-1}. The caller is responsible for scaling W so
/// that I - W is invertible.
KernelMatrix adjacency_kernel(const Graph& g);

/// [H^T H + eps I]^{-1}.
KernelMatrix highpass_kernel(const Matrix& h, double epsilon);

/// Laplacian kernel of the unweighted ring on n vertices in closed form:
/// K(l, l') = k_{l - l'}, k_m = (1/N) sum_n cos(2 pi m n / N) / r(2 - 2 cos(2 pi n / N)).
/// Only lambda-based spectral functions are accepted.
KernelMatrix circulant_kernel(Index n_vertices, const SpectralFunction& r);

/// K / trace(K).
KernelMatrix normalize_trace(const KernelMatrix& k);

/// Piecewise inverse kernel
///   K^{-1} = d L + U_t (Delta - d Lambda_t) U_t^T + d1 11^T + eps I
/// where U_t holds the N - B largest-eigenvalue eigenvectors and
/// Delta = diag(d_tail). L is rebuilt from the spectrum.
InverseKernel inverse_kernel_piecewise(const Spectrum& spec, Index band_size, double d,
                                       const Vector& d_tail, double d1, double epsilon);

/// a_0 I + sum_p a_p L^p by repeated multiplication.
InverseKernel inverse_kernel_polynomial(const Matrix& l, std::span<const double> coeffs);

/// K^dagger + eps I. The default eps is 1e-8 * trace(K^dagger) / N.
InverseKernel regularized_inverse(const KernelMatrix& k, std::optional<double> epsilon = {});

}  // namespace gsr
