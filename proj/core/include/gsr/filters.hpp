#pragma once

#include "gsr/kernels.hpp"
#include "gsr/linalg.hpp"
#include "gsr/spectral.hpp"

namespace gsr {

/// Taps c_0..c_{K-1} of the polynomial filter sum_k c_k L^k.
struct FilterCoefficients {
  Vector c;

  /// Throws InvalidArgument on an empty or non-finite tap vector.
  explicit FilterCoefficients(Vector taps);
  Index size() const noexcept { return c.size(); }
};

/// sum_k c_k L^k y, evaluated by the recursion y, Ly, L^2 y, ...
Vector apply_filter(const Matrix& l, const FilterCoefficients& c, const Vector& y);

/// c_0 + sum_k c_k lambda^k for every eigenvalue (Horner).
Vector frequency_response(const FilterCoefficients& c, const Vector& eigenvalues);

/// Taps whose response equals that of the ridge smoother with kernel
/// U r^dagger U^T and regularizer mu, i.e. r^dagger / (r^dagger + mu N).
/// Interpolates on distinct eigenvalues with Newton divided differences;
/// the result has degree D - 1 and is zero-padded to N taps.
/// Throws IllConditioned (diagnostic = Vandermonde condition number) above
/// 1e12, and InvalidArgument when an index-based r assigns different
/// responses to one repeated eigenvalue.
FilterCoefficients smoother_to_filter(const Spectrum& spec, const SpectralFunction& r, double mu);

/// Spectral function whose ridge smoother reproduces the filter response
/// divided by `scale`.
struct FilterKernel {
  Table r;
  double scale;
};

/// r_n = (1 - g_n) / (mu N g_n) for g_n > 0 and r_n = 0 for g_n = 0, where
/// g = response / scale. The scale is max(1, max response) * (1 + 1e-6);
/// the margin keeps every g_n strictly below 1, because r_n = 0 would be
/// annihilated by the kernel's pseudo-reciprocal instead of passing u_n.
/// Throws AllZeroResponse, and NegativeSpectralValue for negative responses.
FilterKernel filter_to_kernel(const FilterCoefficients& c, const Spectrum& spec, double mu);

}  // namespace gsr
