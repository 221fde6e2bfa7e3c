#pragma once

#include "gsr/kernels.hpp"
#include "gsr/linalg.hpp"
#include "gsr/spectral.hpp"

#include <span>
#include <string>
#include <vector>

namespace gsr {

/// Sampled vertices (strictly increasing, 0-based) and their noisy values.
struct SampleSet {
  std::vector<Index> indices;
  Vector observations;

  /// Validates ordering, range [0, n_vertices), S >= 1 and sizes.
  static SampleSet make(Index n_vertices, std::vector<Index> indices, Vector observations);

  Index size() const noexcept { return static_cast<Index>(indices.size()); }
};

/// Signal estimate on all N vertices. `coefficients` holds the S expansion
/// coefficients alpha when the solver works in representer form, and is
/// empty otherwise.
struct Estimate {
  Vector values;
  Vector coefficients;
  std::string method;
};

/// Kernel ridge regression in representer form:
/// alpha = (Kbar + mu S I)^{-1} y, f = K Psi^T alpha, Kbar = Psi K Psi^T.
Estimate krr(const KernelMatrix& k, const SampleSet& samples, double mu);

/// Same criterion solved over all N expansion coefficients a, f = K a, by
/// zeroing the bracket of the stationarity condition
/// K [(Psi^T Psi K + mu S I) a - Psi^T y] = 0. Exists as an independent
/// check of `krr`.
Estimate krr_full(const KernelMatrix& k, const SampleSet& samples, double mu);

/// Signal-domain form: f = (Psi^T Psi + mu S K^{-1})^{-1} Psi^T y.
Estimate primal_estimate(const InverseKernel& k_inv, const SampleSet& samples, double mu);

/// Least-squares fit in span(U_F). Throws Unidentifiable, carrying the
/// condition number of U_F^T Psi^T Psi U_F, when S < |F| or that matrix is
/// numerically singular (condition number above 1e12).
Estimate ls_bandlimited(const Spectrum& spec, std::span<const Index> band, const SampleSet& samples);

/// Ridge smoother with every vertex observed: f = K (K + mu N I)^{-1} y.
Estimate ridge_smoother(const KernelMatrix& k, const Vector& y_full, double mu);

/// f = C Psi^T (Psi C Psi^T + noise_var I)^{-1} y.
Estimate lmmse(const Matrix& c, double noise_var, const SampleSet& samples);

/// Local LMMSE conditions of a covariance-kernel ridge estimate on a Markov
/// random field. With P = C^{-1}:
///   conditional_variance(n) = 1 / P(n,n)
///   prediction(n)           = -(1/P(n,n)) sum_{m != n} P(n,m) f(m)
/// For unobserved n the residual is f(n) - prediction(n). For observed n,
/// e_hat = noise_var / conditional_variance(n) * (f(n) - prediction(n)) and
/// the residual is y - (f(n) + e_hat).
struct MarkovCheck {
  Vector residuals;
  Vector noise_estimates;  ///< e_hat per sample, in sample order
  Vector conditional_variance;
};
MarkovCheck markov_residuals(const Matrix& c, double noise_var, const SampleSet& samples,
                             const Estimate& est);

/// Splits K a = K Psi^T alpha + K beta with Psi K beta = 0: alpha solves
/// Psi K Psi^T alpha = Psi K a (through the PSD root of K, see source) and
/// beta = a - Psi^T alpha. K must be symmetric PSD.
struct CoefficientSplit {
  Vector alpha;
  Vector beta;
};
CoefficientSplit split_coefficients(const Matrix& k, std::span<const Index> indices,
                                    const Vector& alpha_full);

}  // namespace gsr
