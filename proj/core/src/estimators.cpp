#include "gsr/estimators.hpp"

#include "gsr/error.hpp"

#include <cmath>
#include <limits>

namespace gsr {

namespace {

void require_mu(double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(Errc::InvalidArgument, "regularization mu must be positive and finite");
  }
}

void require_samples_fit(const SampleSet& samples, Index n) {
  if (samples.size() == 0) throw Error(Errc::InvalidArgument, "empty sample set");
  if (samples.indices.back() >= n) {
    throw Error(Errc::DimensionMismatch, "sample index exceeds the number of vertices");
  }
  if (samples.observations.size() != samples.size()) {
    throw Error(Errc::DimensionMismatch, "observation count does not match sample count");
  }
}

}  // namespace

SampleSet SampleSet::make(Index n_vertices, std::vector<Index> indices, Vector observations) {
  if (indices.empty()) throw Error(Errc::InvalidArgument, "sample set must not be empty");
  if (static_cast<Index>(indices.size()) != observations.size()) {
    throw Error(Errc::DimensionMismatch, "one observation per sampled vertex is required");
  }
  for (std::size_t s = 0; s < indices.size(); ++s) {
    if (indices[s] < 0 || indices[s] >= n_vertices) {
      throw Error(Errc::IndexOutOfRange, "sample index out of range");
    }
    if (s > 0 && indices[s] <= indices[s - 1]) {
      throw Error(Errc::InvalidArgument, "sample indices must be strictly increasing");
    }
  }
  return SampleSet{std::move(indices), std::move(observations)};
}

Estimate krr(const KernelMatrix& k, const SampleSet& samples, double mu) {
  require_mu(mu);
  require_samples_fit(samples, k.size());
  const Index s = samples.size();
  Matrix system = linalg::principal(k.matrix(), samples.indices);
  system.diagonal().array() += mu * static_cast<double>(s);
  Vector alpha = linalg::solve_symmetric(system, samples.observations);
  Vector f = linalg::columns(k.matrix(), samples.indices) * alpha;
  return Estimate{std::move(f), std::move(alpha), "krr"};
}

Estimate krr_full(const KernelMatrix& k, const SampleSet& samples, double mu) {
  require_mu(mu);
  require_samples_fit(samples, k.size());
  const Matrix& km = k.matrix();
  const Index n = k.size();
  const double mu_s = mu * static_cast<double>(samples.size());

  // Stationarity of (1/S)||y - Psi K a||^2 + mu a^T K a over all N entries:
  //   K [(Psi^T Psi K + mu S I) a - Psi^T y] = 0.
  // Zeroing the bracket gives a minimizer without squaring K. The bracket
  // matrix has spectrum shifted by mu S > 0, so it is invertible.
  Matrix system = Matrix::Zero(n, n);
  for (Index idx : samples.indices) system.row(idx) = km.row(idx);
  system.diagonal().array() += mu_s;
  const Eigen::FullPivLU<Matrix> lu(system);
  if (!lu.isInvertible()) throw Error(Errc::SingularSystem, "full-form KRR system is singular");
  Vector a = lu.solve(linalg::scatter(samples.indices, samples.observations, n));
  Vector f = km * a;
  return Estimate{std::move(f), std::move(a), "krr_full"};
}

Estimate primal_estimate(const InverseKernel& k_inv, const SampleSet& samples, double mu) {
  require_mu(mu);
  require_samples_fit(samples, k_inv.size());
  const Index n = k_inv.size();
  Matrix system = mu * static_cast<double>(samples.size()) * k_inv.matrix();
  for (Index idx : samples.indices) system(idx, idx) += 1.0;
  Eigen::LDLT<Matrix> ldlt(system);
  if (ldlt.info() != Eigen::Success || !(ldlt.rcond() > 1e-14)) {
    throw Error(Errc::SingularSystem, "primal system is singular", ldlt.rcond());
  }
  Vector f = ldlt.solve(linalg::scatter(samples.indices, samples.observations, n));
  return Estimate{std::move(f), Vector{}, "primal"};
}

Estimate ls_bandlimited(const Spectrum& spec, std::span<const Index> band, const SampleSet& samples) {
  if (band.empty()) throw Error(Errc::EmptyBand, "LS estimator needs a nonempty band");
  require_samples_fit(samples, spec.size());
  const Index b = static_cast<Index>(band.size());
  if (samples.size() < b) {
    throw Error(Errc::Unidentifiable,
                "S = " + std::to_string(samples.size()) + " < |F| = " + std::to_string(b),
                std::numeric_limits<double>::infinity());
  }
  const Matrix u_band = spec.band_basis(band);
  Matrix a(samples.size(), b);
  for (Index s = 0; s < samples.size(); ++s) a.row(s) = u_band.row(samples.indices[s]);
  const Matrix gram = a.transpose() * a;
  const double cond = linalg::condition_psd(gram);
  if (!(cond < 1e12)) {
    throw Error(Errc::Unidentifiable, "sampled band basis is rank deficient", cond);
  }
  const Vector coeffs = gram.ldlt().solve(a.transpose() * samples.observations);
  return Estimate{u_band * coeffs, Vector{}, "ls_bandlimited"};
}

Estimate ridge_smoother(const KernelMatrix& k, const Vector& y_full, double mu) {
  require_mu(mu);
  if (y_full.size() != k.size()) throw Error(Errc::DimensionMismatch, "signal size mismatch");
  const Index n = k.size();
  Matrix system = k.matrix();
  system.diagonal().array() += mu * static_cast<double>(n);
  Vector z = linalg::solve_symmetric(system, y_full);
  Vector f = k.matrix() * z;
  return Estimate{std::move(f), std::move(z), "ridge_smoother"};
}

Estimate lmmse(const Matrix& c, double noise_var, const SampleSet& samples) {
  if (!(noise_var >= 0.0)) throw Error(Errc::InvalidArgument, "noise variance must be nonnegative");
  linalg::require_symmetric(c, 1e-10, "covariance");
  require_samples_fit(samples, c.rows());
  Matrix system = linalg::principal(c, samples.indices);
  system.diagonal().array() += noise_var;
  Eigen::LDLT<Matrix> ldlt(system);
  if (ldlt.info() != Eigen::Success || !(ldlt.rcond() > 1e-14)) {
    throw Error(Errc::SingularSystem, "Psi C Psi^T + noise_var I is singular", ldlt.rcond());
  }
  Vector alpha = ldlt.solve(samples.observations);
  Vector f = linalg::columns(c, samples.indices) * alpha;
  return Estimate{std::move(f), std::move(alpha), "lmmse"};
}

MarkovCheck markov_residuals(const Matrix& c, double noise_var, const SampleSet& samples,
                             const Estimate& est) {
  linalg::require_symmetric(c, 1e-10, "covariance");
  const Index n = c.rows();
  require_samples_fit(samples, n);
  if (est.values.size() != n) throw Error(Errc::DimensionMismatch, "estimate size mismatch");

  Eigen::LDLT<Matrix> ldlt(c);
  if (ldlt.info() != Eigen::Success || !(ldlt.rcond() > 1e-14)) {
    throw Error(Errc::SingularPrecision, "covariance is not invertible", ldlt.rcond());
  }
  const Matrix precision = ldlt.solve(Matrix::Identity(n, n));
  const Vector& f = est.values;

  MarkovCheck out{Vector::Zero(n), Vector::Zero(samples.size()), Vector::Zero(n)};
  std::vector<Index> sample_of(static_cast<std::size_t>(n), -1);
  for (Index s = 0; s < samples.size(); ++s) sample_of[samples.indices[s]] = s;

  for (Index v = 0; v < n; ++v) {
    const double p_vv = precision(v, v);
    if (!(p_vv > 0.0)) throw Error(Errc::SingularPrecision, "precision diagonal is not positive");
    double neighbours = 0.0;
    for (Index m = 0; m < n; ++m) {
      if (m != v && precision(v, m) != 0.0) neighbours += precision(v, m) * f(m);
    }
    const double cond_var = 1.0 / p_vv;
    const double prediction = -cond_var * neighbours;
    out.conditional_variance(v) = cond_var;
    const Index s = sample_of[v];
    if (s < 0) {
      out.residuals(v) = f(v) - prediction;
    } else {
      const double e_hat = noise_var / cond_var * (f(v) - prediction);
      out.noise_estimates(s) = e_hat;
      out.residuals(v) = samples.observations(s) - (f(v) + e_hat);
    }
  }
  return out;
}

CoefficientSplit split_coefficients(const Matrix& k, std::span<const Index> indices,
                                    const Vector& alpha_full) {
  const Index n = k.rows();
  if (alpha_full.size() != n) throw Error(Errc::DimensionMismatch, "coefficient size mismatch");
  // With K = R R (R the PSD root) and B = Psi R, the system Psi K Psi^T alpha =
  // Psi K a reads B B^T alpha = B (R a). Its least-squares solution of
  // B^T alpha ~ R a leaves a residual in null(B), so Psi K beta vanishes
  // without squaring the conditioning of Psi K Psi^T.
  const Matrix root = linalg::sqrt_psd(k);
  const Matrix bt = linalg::columns(root, indices);
  const Eigen::CompleteOrthogonalDecomposition<Matrix> cod(bt);
  Vector alpha = cod.solve(root * alpha_full);
  Vector beta = alpha_full - linalg::scatter(indices, alpha, n);
  return CoefficientSplit{std::move(alpha), std::move(beta)};
}

}  // namespace gsr
