#include "gsr/kernels.hpp"

#include "gsr/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace gsr {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

std::string fmt(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(Errc::InvalidArgument, std::string(what) + " must be positive and finite");
  }
}

void require_nonnegative(double v, const char* what) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw Error(Errc::InvalidArgument, std::string(what) + " must be nonnegative and finite");
  }
}

}  // namespace

double evaluate(const SpectralFunction& r, Index n, double lambda) {
  return std::visit(
      overloaded{
          [&](const Diffusion& f) {
            require_nonnegative(f.sigma2, "diffusion sigma2");
            return std::exp(f.sigma2 * lambda / 2.0);
          },
          [&](const PStepRandomWalk& f) {
            if (!(f.a >= 2.0)) throw Error(Errc::InvalidArgument, "random-walk a must be >= 2");
            if (f.p < 1) throw Error(Errc::InvalidArgument, "random-walk p must be >= 1");
            if (lambda > f.a) throw Error(Errc::InvalidArgument, "random-walk a is below an eigenvalue", lambda);
            return std::pow(f.a - lambda, -f.p);
          },
          [&](const LaplacianRegularization& f) {
            require_nonnegative(f.sigma2, "regularization sigma2");
            return 1.0 + f.sigma2 * lambda;
          },
          [&](const Bandlimited& f) {
            require_positive(f.beta, "bandlimited beta");
            if (f.band.empty()) throw Error(Errc::EmptyBand, "bandlimited band is empty");
            for (Index k : f.band) {
              if (k == n) return 1.0 / f.beta;
            }
            return f.beta;
          },
          [&](const Table& f) {
            if (n < 0 || n >= f.values.size()) {
              throw Error(Errc::DimensionMismatch, "table spectral function too short");
            }
            return f.values(n);
          },
      },
      r);
}

Vector evaluate(const SpectralFunction& r, const Vector& eigenvalues) {
  if (const auto* t = std::get_if<Table>(&r); t && t->values.size() != eigenvalues.size()) {
    throw Error(Errc::DimensionMismatch, "table spectral function size mismatch");
  }
  if (const auto* b = std::get_if<Bandlimited>(&r)) {
    for (Index k : b->band) {
      if (k < 0 || k >= eigenvalues.size()) throw Error(Errc::IndexOutOfRange, "band index out of range");
    }
  }
  Vector out(eigenvalues.size());
  for (Index n = 0; n < eigenvalues.size(); ++n) out(n) = evaluate(r, n, eigenvalues(n));
  return out;
}

bool is_index_based(const SpectralFunction& r) {
  return std::holds_alternative<Bandlimited>(r) || std::holds_alternative<Table>(r);
}

std::string describe(const SpectralFunction& r) {
  return std::visit(
      overloaded{
          [](const Diffusion& f) { return "diffusion(sigma2=" + fmt(f.sigma2) + ")"; },
          [](const PStepRandomWalk& f) {
            return "random_walk(a=" + fmt(f.a) + ",p=" + std::to_string(f.p) + ")";
          },
          [](const LaplacianRegularization& f) {
            return "laplacian_regularization(sigma2=" + fmt(f.sigma2) + ")";
          },
          [](const Bandlimited& f) {
            return "bandlimited(B=" + std::to_string(f.band.size()) + ",beta=" + fmt(f.beta) + ")";
          },
          [](const Table& f) { return "table(N=" + std::to_string(f.values.size()) + ")"; },
      },
      r);
}

Vector pseudo_reciprocal(const Vector& r) {
  double max_r = 0.0;
  for (Index n = 0; n < r.size(); ++n) {
    if (std::isnan(r(n)) || r(n) < 0.0) {
      throw Error(Errc::NegativeSpectralValue,
                  "spectral function is negative or NaN at index " + std::to_string(n), r(n));
    }
    if (std::isfinite(r(n))) max_r = std::max(max_r, r(n));
  }
  const double cutoff = 1e-12 * max_r;
  Vector out(r.size());
  for (Index n = 0; n < r.size(); ++n) out(n) = r(n) >= cutoff && r(n) > 0.0 ? 1.0 / r(n) : 0.0;
  return out;
}

KernelMatrix::KernelMatrix(Matrix matrix, std::string provenance)
    : matrix_(std::move(matrix)), provenance_(std::move(provenance)) {
  linalg::require_symmetric(matrix_, 1e-10, "kernel matrix");
  linalg::require_psd(matrix_, 1e-8, "kernel matrix");
}

KernelMatrix::KernelMatrix(Matrix matrix, std::string provenance, Unchecked)
    : matrix_(std::move(matrix)), provenance_(std::move(provenance)) {
  linalg::require_symmetric(matrix_, 1e-10, "kernel matrix");
}

KernelMatrix KernelMatrix::psd_by_construction(Matrix matrix, std::string provenance) {
  return KernelMatrix(std::move(matrix), std::move(provenance), Unchecked{});
}

InverseKernel::InverseKernel(Matrix inv_matrix, std::string provenance)
    : inv_matrix_(std::move(inv_matrix)), provenance_(std::move(provenance)) {
  linalg::require_symmetric(inv_matrix_, 1e-10, "inverse kernel");
  const double lo = linalg::min_eigenvalue(inv_matrix_);
  if (!(lo > 0.0)) {
    throw Error(Errc::NotPositiveDefinite, "inverse kernel is not positive definite", lo);
  }
}

Vector kernel_spectrum(const SpectralFunction& r, const Vector& eigenvalues) {
  const Vector values = evaluate(r, eigenvalues);
  if (std::holds_alternative<Table>(r)) return pseudo_reciprocal(values);
  // Analytic families are strictly positive, so any tiny value is real
  // signal (a diffusion kernel easily spans 1e30) and 1/r is exact.
  Vector out(values.size());
  for (Index n = 0; n < values.size(); ++n) {
    const double v = values(n);
    if (std::isnan(v) || !(v > 0.0)) {
      throw Error(Errc::NegativeSpectralValue,
                  "spectral function is not positive at index " + std::to_string(n), v);
    }
    out(n) = std::isinf(v) ? 0.0 : 1.0 / v;
  }
  return out;
}

KernelMatrix laplacian_kernel(const Spectrum& spec, const SpectralFunction& r) {
  if (const auto* bl = std::get_if<Bandlimited>(&r)) return bandlimited_kernel(spec, bl->band, bl->beta);
  const Vector r_dagger = kernel_spectrum(r, spec.eigenvalues);
  return KernelMatrix::psd_by_construction(symmetrized(spec.synthesize(r_dagger)),
                                           "laplacian:" + describe(r));
}

KernelMatrix bandlimited_kernel(const Spectrum& spec, std::span<const Index> band, double beta) {
  if (band.empty()) throw Error(Errc::EmptyBand, "bandlimited kernel needs a nonempty band");
  require_positive(beta, "bandlimited beta");
  Bandlimited r{std::vector<Index>(band.begin(), band.end()), beta};
  const Vector r_dagger = kernel_spectrum(SpectralFunction{r}, spec.eigenvalues);
  return KernelMatrix::psd_by_construction(symmetrized(spec.synthesize(r_dagger)), describe(r));
}

KernelMatrix covariance_kernel(const Matrix& c) { return KernelMatrix(c, "covariance"); }

KernelMatrix adjacency_kernel(const Graph& g) {
  const Index n = g.size();
  const Matrix a = Matrix::Identity(n, n) - g.weights();
  Eigen::FullPivLU<Matrix> lu(a);
  if (!lu.isInvertible() || lu.rcond() < 1e-12) {
    throw Error(Errc::SingularMatrix, "I - W is singular; rescale the adjacency matrix", lu.rcond());
  }
  const Matrix gram = a.transpose() * a;
  const Matrix k = gram.llt().solve(Matrix::Identity(n, n));
  return KernelMatrix(symmetrized(k), "adjacency");
}

KernelMatrix highpass_kernel(const Matrix& h, double epsilon) {
  require_positive(epsilon, "highpass epsilon");
  const Index n = h.cols();
  Matrix gram = h.transpose() * h;
  gram.diagonal().array() += epsilon;
  const Matrix k = gram.llt().solve(Matrix::Identity(n, n));
  return KernelMatrix(symmetrized(k), "highpass(eps=" + fmt(epsilon) + ")");
}

KernelMatrix circulant_kernel(Index n_vertices, const SpectralFunction& r) {
  if (n_vertices < 3) throw Error(Errc::TooFewVertices, "ring needs at least 3 vertices");
  if (is_index_based(r)) {
    throw Error(Errc::InvalidArgument, "circulant closed form needs a lambda-based spectral function");
  }
  const double two_pi_over_n = 2.0 * std::numbers::pi / static_cast<double>(n_vertices);
  Vector inv_r(n_vertices);
  for (Index n = 0; n < n_vertices; ++n) {
    const double lambda = 2.0 * (1.0 - std::cos(two_pi_over_n * static_cast<double>(n)));
    const double value = evaluate(r, n, lambda);
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(Errc::ZeroSpectralValue, "r must be strictly positive on the ring spectrum", value);
    }
    inv_r(n) = 1.0 / value;
  }
  // k_m = IDFT of 1/r; 1/r is even in n so the transform is real.
  Vector k(n_vertices);
  for (Index m = 0; m < n_vertices; ++m) {
    double acc = 0.0;
    for (Index n = 0; n < n_vertices; ++n) {
      acc += inv_r(n) * std::cos(two_pi_over_n * static_cast<double>((m * n) % n_vertices));
    }
    k(m) = acc / static_cast<double>(n_vertices);
  }
  Matrix out(n_vertices, n_vertices);
  for (Index i = 0; i < n_vertices; ++i)
    for (Index j = 0; j < n_vertices; ++j) out(i, j) = k(((i - j) % n_vertices + n_vertices) % n_vertices);
  return KernelMatrix(symmetrized(out), "circulant:" + describe(r));
}

KernelMatrix normalize_trace(const KernelMatrix& k) {
  const double tr = k.matrix().trace();
  if (!(tr > 0.0)) throw Error(Errc::ZeroTrace, "cannot normalize a kernel with zero trace");
  return KernelMatrix::psd_by_construction(k.matrix() / tr, k.provenance() + "/trace");
}

InverseKernel inverse_kernel_piecewise(const Spectrum& spec, Index band_size, double d,
                                       const Vector& d_tail, double d1, double epsilon) {
  const Index n = spec.size();
  if (band_size < 1 || band_size > n) {
    throw Error(Errc::ConstraintViolation, "band size must lie in [1, N]");
  }
  if (!(d > 0.0)) throw Error(Errc::ConstraintViolation, "d must be positive");
  if (!(d1 > 0.0)) throw Error(Errc::ConstraintViolation, "d1 must be positive");
  if (!(epsilon > 0.0)) throw Error(Errc::ConstraintViolation, "epsilon must be positive");
  const Index tail = n - band_size;
  if (d_tail.size() != tail) {
    throw Error(Errc::DimensionMismatch, "d_tail must hold N - B values");
  }
  for (Index k = 0; k < tail; ++k) {
    if (!(d_tail(k) > -spec.eigenvalues(band_size + k))) {
      throw Error(Errc::ConstraintViolation, "d_n must exceed -lambda_n");
    }
  }

  Matrix inv = d * spec.synthesize(spec.eigenvalues);
  if (tail > 0) {
    const auto u_tail = spec.eigenvectors.rightCols(tail);
    const Vector diag = d_tail - d * spec.eigenvalues.tail(tail);
    inv += u_tail * diag.asDiagonal() * u_tail.transpose();
  }
  inv.array() += d1;
  inv.diagonal().array() += epsilon;
  return InverseKernel(symmetrized(inv), "piecewise(B=" + std::to_string(band_size) + ")");
}

InverseKernel inverse_kernel_polynomial(const Matrix& l, std::span<const double> coeffs) {
  if (coeffs.empty()) throw Error(Errc::InvalidArgument, "polynomial needs at least a_0");
  linalg::require_symmetric(l, 1e-10, "Laplacian");
  const Index n = l.rows();
  Matrix inv = coeffs[0] * Matrix::Identity(n, n);
  Matrix power = Matrix::Identity(n, n);
  for (std::size_t p = 1; p < coeffs.size(); ++p) {
    power = power * l;
    if (coeffs[p] != 0.0) inv += coeffs[p] * power;
  }
  return InverseKernel(symmetrized(inv), "polynomial(P=" + std::to_string(coeffs.size() - 1) + ")");
}

InverseKernel regularized_inverse(const KernelMatrix& k, std::optional<double> epsilon) {
  Matrix inv = linalg::pinv_symmetric(k.matrix(), 1e-12);
  const Index n = k.size();
  double eps = epsilon.value_or(1e-8 * inv.trace() / static_cast<double>(n));
  if (!(eps > 0.0)) eps = 1e-8;
  inv.diagonal().array() += eps;
  return InverseKernel(symmetrized(inv), k.provenance() + "^-1");
}

}  // namespace gsr
