#include "gsr/mkl.hpp"

#include "gsr/error.hpp"

#include <cmath>

namespace gsr {

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw Error(Errc::InvalidArgument, std::string(what) + " must be positive and finite");
  }
}

void require_samples_fit(const SampleSet& samples, Index n) {
  if (samples.size() == 0) throw Error(Errc::InvalidArgument, "empty sample set");
  if (samples.indices.back() >= n || samples.observations.size() != samples.size()) {
    throw Error(Errc::DimensionMismatch, "sample set does not match the dictionary");
  }
}

std::vector<Matrix> restricted_kernels(const KernelDictionary& dict, const SampleSet& samples) {
  std::vector<Matrix> out;
  out.reserve(dict.kernels().size());
  for (const KernelMatrix& k : dict.kernels()) out.push_back(linalg::principal(k.matrix(), samples.indices));
  return out;
}

std::vector<Matrix> roots_of(const std::vector<Matrix>& kbar) {
  std::vector<Matrix> out;
  out.reserve(kbar.size());
  for (const Matrix& k : kbar) out.push_back(linalg::sqrt_psd(k));
  return out;
}

}  // namespace

KernelDictionary::KernelDictionary(std::vector<KernelMatrix> kernels, std::vector<double> labels,
                                   bool normalize)
    : labels_(std::move(labels)) {
  if (kernels.empty()) throw Error(Errc::InvalidArgument, "kernel dictionary is empty");
  if (kernels.size() != labels_.size()) {
    throw Error(Errc::InvalidArgument, "one label per dictionary kernel is required");
  }
  const Index n = kernels.front().size();
  kernels_.reserve(kernels.size());
  for (KernelMatrix& k : kernels) {
    if (k.size() != n) throw Error(Errc::DimensionMismatch, "dictionary kernels differ in size");
    kernels_.push_back(normalize ? normalize_trace(k) : std::move(k));
  }
}

KernelDictionary bandlimited_dictionary(const Spectrum& spec, const std::vector<Index>& bandwidths,
                                        double beta, bool normalize) {
  std::vector<KernelMatrix> kernels;
  std::vector<double> labels;
  for (Index b : bandwidths) {
    if (b < 1 || b > spec.size()) throw Error(Errc::InvalidArgument, "dictionary bandwidth out of range");
    const std::vector<Index> band = low_pass_band(b);
    kernels.push_back(bandlimited_kernel(spec, band, beta));
    labels.push_back(static_cast<double>(b));
  }
  return KernelDictionary(std::move(kernels), std::move(labels), normalize);
}

Vector soft_threshold(const Vector& a, double zeta) {
  const double norm = a.norm();
  if (norm <= zeta || norm == 0.0) return Vector::Zero(a.size());
  return ((norm - zeta) / norm) * a;
}

RsSolution rs_admm(const KernelDictionary& dict, const SampleSet& samples, const RsOptions& opts,
                   const RsSolution* warm_start) {
  require_positive(opts.mu, "mu");
  require_positive(opts.rho, "rho");
  require_positive(opts.eps, "eps");
  if (opts.max_iter < 1) throw Error(Errc::InvalidArgument, "max_iter must be >= 1");
  require_samples_fit(samples, dict.dim());

  const Index s = samples.size();
  const Index m_count = dict.size();
  const std::vector<Matrix> kbar = restricted_kernels(dict, samples);
  const std::vector<Matrix> root = roots_of(kbar);
  const Vector& y = samples.observations;

  Vector phi_t_y(m_count * s);
  Matrix gram = opts.rho * Matrix::Identity(s, s);
  for (Index m = 0; m < m_count; ++m) {
    phi_t_y.segment(m * s, s) = root[m] * y;
    gram.noalias() += root[m] * root[m];
  }
  // (Phi^T Phi + rho I)^{-1} b = (b - Phi^T (rho I + Phi Phi^T)^{-1} Phi b) / rho
  const Eigen::LLT<Matrix> gram_llt(gram);
  if (gram_llt.info() != Eigen::Success) {
    throw Error(Errc::SingularSystem, "rho I + Phi Phi^T is not positive definite");
  }

  Vector o = Vector::Zero(m_count * s);
  Vector abar = Vector::Zero(m_count * s);
  Vector nu = Vector::Zero(m_count * s);
  if (warm_start != nullptr && warm_start->o.size() == o.size() && warm_start->nu.size() == nu.size()) {
    o = warm_start->o;
    nu = warm_start->nu;
  }

  const double zeta = opts.mu * static_cast<double>(s) / (2.0 * opts.rho);
  RsSolution sol;
  Vector b(m_count * s);
  Vector phi_b(s);
  for (int it = 1; it <= opts.max_iter; ++it) {
    for (Index m = 0; m < m_count; ++m) {
      abar.segment(m * s, s) = soft_threshold(o.segment(m * s, s) + nu.segment(m * s, s), zeta);
    }
    b = phi_t_y + opts.rho * (abar - nu);
    phi_b.setZero();
    for (Index m = 0; m < m_count; ++m) phi_b.noalias() += root[m] * b.segment(m * s, s);
    const Vector z = gram_llt.solve(phi_b);
    for (Index m = 0; m < m_count; ++m) {
      o.segment(m * s, s) = (b.segment(m * s, s) - root[m] * z) / opts.rho;
    }
    nu += o - abar;
    sol.iterations = it;
    sol.final_residual = (o - abar).norm();
    if (sol.final_residual <= opts.eps) {
      sol.converged = true;
      break;
    }
  }

  sol.norms.resize(m_count);
  for (Index m = 0; m < m_count; ++m) {
    Vector ab = abar.segment(m * s, s);
    sol.norms(m) = ab.norm();
    sol.alpha.push_back(linalg::pinv_sqrt_psd(kbar[m]) * ab);
    sol.alpha_bar.push_back(std::move(ab));
  }
  sol.o = std::move(o);
  sol.nu = std::move(nu);
  return sol;
}

Estimate rs_reconstruct(const KernelDictionary& dict, const SampleSet& samples, const RsSolution& sol) {
  require_samples_fit(samples, dict.dim());
  if (static_cast<Index>(sol.alpha.size()) != dict.size()) {
    throw Error(Errc::DimensionMismatch, "solution does not match the dictionary");
  }
  Vector f = Vector::Zero(dict.dim());
  for (Index m = 0; m < dict.size(); ++m) {
    if (sol.alpha[m].size() != samples.size()) {
      throw Error(Errc::DimensionMismatch, "solution does not match the sample set");
    }
    f.noalias() += linalg::columns(dict.kernel(m).matrix(), samples.indices) * sol.alpha[m];
  }
  return Estimate{std::move(f), Vector{}, "rs_mkl"};
}

double rs_objective(const KernelDictionary& dict, const SampleSet& samples, double mu,
                    const std::vector<Vector>& alpha_bar) {
  require_samples_fit(samples, dict.dim());
  if (static_cast<Index>(alpha_bar.size()) != dict.size()) {
    throw Error(Errc::DimensionMismatch, "coefficient blocks do not match the dictionary");
  }
  const std::vector<Matrix> root = roots_of(restricted_kernels(dict, samples));
  Vector fit = samples.observations;
  double penalty = 0.0;
  for (Index m = 0; m < dict.size(); ++m) {
    fit.noalias() -= root[m] * alpha_bar[m];
    penalty += alpha_bar[m].norm();
  }
  return fit.squaredNorm() / static_cast<double>(samples.size()) + mu * penalty;
}

namespace {

Vector resolve_theta0(const KsOptions& opts, Index m_count) {
  require_positive(opts.mu, "mu");
  require_positive(opts.radius, "radius");
  require_positive(opts.eps, "eps");
  if (!(opts.eta > 0.0 && opts.eta < 1.0)) throw Error(Errc::InvalidArgument, "eta must lie in (0, 1)");
  if (opts.max_iter < 1) throw Error(Errc::InvalidArgument, "max_iter must be >= 1");
  if (opts.theta0.size() == 0) return Vector::Zero(m_count);
  if (opts.theta0.size() != m_count) throw Error(Errc::DimensionMismatch, "theta0 size mismatch");
  if (!(opts.theta0.minCoeff() >= 0.0)) throw Error(Errc::InvalidArgument, "theta0 must be nonnegative");
  return opts.theta0;
}

// theta = theta0 + R v / ||v||; stays at theta0 when v = 0.
Vector project_direction(const Vector& theta0, const Vector& v, double radius) {
  const double nv = v.norm();
  Vector theta = nv > 0.0 ? Vector(theta0 + (radius / nv) * v) : theta0;
  if (theta.minCoeff() < 0.0) {
    throw Error(Errc::ConstraintViolation, "kernel weights left the nonnegative orthant",
                theta.minCoeff());
  }
  return theta;
}

}  // namespace

KsSolution ks_iia(const KernelDictionary& dict, const SampleSet& samples, const KsOptions& opts) {
  require_samples_fit(samples, dict.dim());
  const Index m_count = dict.size();
  const Vector theta0 = resolve_theta0(opts, m_count);
  const Index s = samples.size();
  const std::vector<Matrix> kbar = restricted_kernels(dict, samples);
  const Vector& y = samples.observations;
  const double mu_s = opts.mu * static_cast<double>(s);

  auto fit = [&](const Vector& theta) {
    Matrix a = mu_s * Matrix::Identity(s, s);
    for (Index m = 0; m < m_count; ++m) {
      if (theta(m) != 0.0) a.noalias() += theta(m) * kbar[m];
    }
    const Eigen::LLT<Matrix> llt(a);
    if (llt.info() != Eigen::Success) throw Error(Errc::SingularSystem, "Kbar(theta) + mu S I is singular");
    return Vector(llt.solve(y));
  };

  KsSolution sol;
  sol.theta = theta0;
  sol.alpha = fit(theta0);
  Vector v(m_count);
  for (int it = 1; it <= opts.max_iter; ++it) {
    for (Index m = 0; m < m_count; ++m) v(m) = sol.alpha.dot(kbar[m] * sol.alpha);
    sol.theta = project_direction(theta0, v, opts.radius);
    Vector next = opts.eta * sol.alpha + (1.0 - opts.eta) * fit(sol.theta);
    const double step = (next - sol.alpha).norm();
    sol.alpha = std::move(next);
    sol.iterations = it;
    if (step < opts.eps) {
      sol.converged = true;
      break;
    }
  }
  return sol;
}

Estimate ks_reconstruct(const KernelDictionary& dict, const SampleSet& samples, const KsSolution& sol) {
  require_samples_fit(samples, dict.dim());
  if (sol.theta.size() != dict.size() || sol.alpha.size() != samples.size()) {
    throw Error(Errc::DimensionMismatch, "solution does not match the problem");
  }
  Vector f = Vector::Zero(dict.dim());
  for (Index m = 0; m < dict.size(); ++m) {
    if (sol.theta(m) != 0.0) {
      f.noalias() += sol.theta(m) * (linalg::columns(dict.kernel(m).matrix(), samples.indices) * sol.alpha);
    }
  }
  return Estimate{std::move(f), sol.alpha, "ks_mkl"};
}

KsSolution ks_iia_smoothing(const KernelDictionary& dict, const Spectrum& spec, const Vector& y_full,
                            const KsOptions& opts) {
  const Index n = dict.dim();
  if (spec.size() != n || y_full.size() != n) {
    throw Error(Errc::DimensionMismatch, "spectrum, signal and dictionary sizes differ");
  }
  const Index m_count = dict.size();
  const Vector theta0 = resolve_theta0(opts, m_count);
  const Matrix& u = spec.eigenvectors;

  Matrix r(m_count, n);
  for (Index m = 0; m < m_count; ++m) {
    const Matrix& k = dict.kernel(m).matrix();
    const Vector diag = (u.transpose() * k * u).diagonal();
    const double scale = std::max(1.0, k.cwiseAbs().maxCoeff());
    const double mismatch = (k - u * diag.asDiagonal() * u.transpose()).cwiseAbs().maxCoeff();
    if (mismatch > 1e-8 * scale) {
      throw Error(Errc::SpectrumMismatch, "dictionary kernel is not diagonal in the given eigenbasis",
                  mismatch);
    }
    r.row(m) = diag.transpose();
  }

  const Vector y_tilde = u.transpose() * y_full;
  const double mu_n = opts.mu * static_cast<double>(n);
  auto fit = [&](const Vector& theta) {
    const Vector denom = (r.transpose() * theta).array() + mu_n;
    return Vector(y_tilde.cwiseQuotient(denom));
  };

  KsSolution sol;
  sol.theta = theta0;
  Vector a_tilde = fit(theta0);
  for (int it = 1; it <= opts.max_iter; ++it) {
    const Vector v = r * a_tilde.cwiseAbs2();
    sol.theta = project_direction(theta0, v, opts.radius);
    Vector next = opts.eta * a_tilde + (1.0 - opts.eta) * fit(sol.theta);
    const double step = (next - a_tilde).norm();
    a_tilde = std::move(next);
    sol.iterations = it;
    if (step < opts.eps) {
      sol.converged = true;
      break;
    }
  }
  sol.alpha = u * a_tilde;
  return sol;
}

SparsityPath sparsity_path(const KernelDictionary& dict, const SampleSet& samples,
                           const std::vector<double>& mu_grid, const RsOptions& opts) {
  if (mu_grid.empty()) throw Error(Errc::InvalidArgument, "mu grid is empty");
  for (std::size_t j = 1; j < mu_grid.size(); ++j) {
    if (!(mu_grid[j] > mu_grid[j - 1])) throw Error(Errc::InvalidArgument, "mu grid must be ascending");
  }
  const Index g = static_cast<Index>(mu_grid.size());
  SparsityPath path{Matrix::Zero(dict.size(), g), Matrix::Zero(dict.size(), g), {}, {}};
  std::optional<RsSolution> previous;
  for (Index j = 0; j < g; ++j) {
    RsOptions point = opts;
    point.mu = mu_grid[static_cast<std::size_t>(j)];
    RsSolution sol = rs_admm(dict, samples, point, previous ? &*previous : nullptr);
    for (Index m = 0; m < dict.size(); ++m) {
      path.norms_sq(m, j) = sol.norms(m) * sol.norms(m);
      path.alpha_norms_sq(m, j) = sol.alpha[m].squaredNorm();
    }
    path.iterations.push_back(sol.iterations);
    path.converged.push_back(sol.converged);
    previous = std::move(sol);
  }
  return path;
}

double naive_bandwidth(const Vector& norms_sq, const std::vector<double>& bandwidths) {
  if (norms_sq.size() == 0 || static_cast<std::size_t>(norms_sq.size()) != bandwidths.size()) {
    throw Error(Errc::DimensionMismatch, "one norm per bandwidth is required");
  }
  Index best = 0;
  for (Index m = 1; m < norms_sq.size(); ++m) {
    const double cur = norms_sq(m);
    const double top = norms_sq(best);
    if (cur > top || (cur == top && bandwidths[m] < bandwidths[best])) best = m;
  }
  if (!(norms_sq(best) > 0.0)) throw Error(Errc::AllZero, "no kernel was selected; mu is too large");
  return bandwidths[static_cast<std::size_t>(best)];
}

}  // namespace gsr
