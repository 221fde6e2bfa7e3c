#include "gsr/filters.hpp"

#include "gsr/error.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace gsr {

namespace {

constexpr double kScaleMargin = 1e-6;

void require_mu(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(Errc::InvalidArgument, "regularization mu must be positive and finite");
  }
}

}  // namespace

FilterCoefficients::FilterCoefficients(Vector taps) : c(std::move(taps)) {
  if (c.size() == 0) throw Error(Errc::InvalidArgument, "filter needs at least one tap");
  if (!c.allFinite()) throw Error(Errc::InvalidArgument, "filter taps must be finite");
}

Vector apply_filter(const Matrix& l, const FilterCoefficients& c, const Vector& y) {
  if (l.rows() != l.cols() || y.size() != l.rows()) {
    throw Error(Errc::DimensionMismatch, "filter operand sizes do not match");
  }
  Vector power = y;
  Vector out = c.c(0) * y;
  for (Index k = 1; k < c.size(); ++k) {
    power = l * power;
    out += c.c(k) * power;
  }
  return out;
}

Vector frequency_response(const FilterCoefficients& c, const Vector& eigenvalues) {
  Vector g(eigenvalues.size());
  for (Index n = 0; n < eigenvalues.size(); ++n) {
    double acc = 0.0;
    for (Index k = c.size() - 1; k >= 0; --k) acc = acc * eigenvalues(n) + c.c(k);
    g(n) = acc;
  }
  return g;
}

FilterCoefficients smoother_to_filter(const Spectrum& spec, const SpectralFunction& r, double mu) {
  require_mu(mu);
  const Index n = spec.size();
  const Vector r_dagger = kernel_spectrum(r, spec.eigenvalues);
  const double mu_n = mu * static_cast<double>(n);
  const Vector response = r_dagger.array() / (r_dagger.array() + mu_n);

  const std::vector<Index> first = distinct_eigenvalue_groups(spec.eigenvalues);
  const Index d = static_cast<Index>(first.size());
  Vector x(d);
  Vector g(d);
  for (Index k = 0; k < d; ++k) {
    const Index begin = first[k];
    const Index end = k + 1 < d ? first[k + 1] : n;
    x(k) = spec.eigenvalues(begin);
    g(k) = response(begin);
    for (Index m = begin + 1; m < end; ++m) {
      if (std::abs(response(m) - g(k)) > 1e-12 * std::max(1.0, std::abs(g(k)))) {
        throw Error(Errc::InvalidArgument,
                    "spectral function is not a function of the eigenvalue on a repeated eigenvalue");
      }
    }
  }

  Matrix vandermonde(d, d);
  for (Index i = 0; i < d; ++i) {
    double p = 1.0;
    for (Index j = 0; j < d; ++j) {
      vandermonde(i, j) = p;
      p *= x(i);
    }
  }
  const Eigen::JacobiSVD<Matrix> svd(vandermonde);
  const Vector sv = svd.singularValues();
  const double cond = sv(d - 1) > 0.0 ? sv(0) / sv(d - 1) : std::numeric_limits<double>::infinity();
  if (!(cond <= 1e12)) {
    throw Error(Errc::IllConditioned, "Vandermonde system on distinct eigenvalues is ill-conditioned",
                cond);
  }

  // Newton divided differences, in place.
  Vector dd = g;
  for (Index level = 1; level < d; ++level) {
    for (Index i = d - 1; i >= level; --i) {
      dd(i) = (dd(i) - dd(i - 1)) / (x(i) - x(i - level));
    }
  }
  // Expand the Newton form into monomial coefficients, innermost first.
  Vector poly = Vector::Zero(d);
  poly(0) = dd(d - 1);
  Index degree = 0;
  for (Index k = d - 2; k >= 0; --k) {
    // poly <- poly * (x - x_k) + dd_k
    for (Index j = degree + 1; j >= 1; --j) poly(j) = poly(j - 1) - x(k) * poly(j);
    poly(0) = -x(k) * poly(0) + dd(k);
    ++degree;
  }

  Vector taps = Vector::Zero(n);
  taps.head(d) = poly;
  return FilterCoefficients(std::move(taps));
}

FilterKernel filter_to_kernel(const FilterCoefficients& c, const Spectrum& spec, double mu) {
  require_mu(mu);
  const Vector response = frequency_response(c, spec.eigenvalues);
  if (response.minCoeff() < 0.0) {
    throw Error(Errc::NegativeSpectralValue,
                "negative frequency response cannot be realized by a kernel smoother",
                response.minCoeff());
  }
  const double peak = response.maxCoeff();
  if (!(peak > 0.0)) throw Error(Errc::AllZeroResponse, "filter response is identically zero");

  const double scale = std::max(1.0, peak) * (1.0 + kScaleMargin);
  const double mu_n = mu * static_cast<double>(spec.size());
  Vector r(spec.size());
  for (Index k = 0; k < spec.size(); ++k) {
    const double g = response(k) / scale;
    r(k) = g > 0.0 ? (1.0 - g) / (mu_n * g) : 0.0;
  }
  return FilterKernel{Table{std::move(r)}, scale};
}

}  // namespace gsr
