#pragma once

#include "gsr/estimators.hpp"
#include "gsr/kernels.hpp"
#include "gsr/linalg.hpp"
#include "gsr/spectral.hpp"

#include <optional>
#include <vector>

namespace gsr {

/// Ordered kernels on a common vertex set with one numeric label each
/// (a bandwidth or a diffusion parameter).
class KernelDictionary {
 public:
  /// Throws InvalidArgument when empty or label count differs, and
  /// DimensionMismatch when sizes differ. With `normalize`, each kernel is
  /// divided by its trace.
  KernelDictionary(std::vector<KernelMatrix> kernels, std::vector<double> labels,
                   bool normalize = true);

  Index size() const noexcept { return static_cast<Index>(kernels_.size()); }
  Index dim() const noexcept { return kernels_.front().size(); }
  const KernelMatrix& kernel(Index m) const { return kernels_.at(static_cast<std::size_t>(m)); }
  const std::vector<KernelMatrix>& kernels() const noexcept { return kernels_; }
  const std::vector<double>& labels() const noexcept { return labels_; }

 private:
  std::vector<KernelMatrix> kernels_;
  std::vector<double> labels_;
};

/// M bandlimited kernels with low-pass bands of the given sizes.
KernelDictionary bandlimited_dictionary(const Spectrum& spec, const std::vector<Index>& bandwidths,
                                        double beta, bool normalize = true);

/// T_zeta(a) = max(0, ||a|| - zeta) / ||a|| * a, with 0 for ||a|| <= zeta.
Vector soft_threshold(const Vector& a, double zeta);

struct RsOptions {
  double mu = 1e-1;
  double rho = 1.0;
  double eps = 1e-6;
  int max_iter = 5000;
};

struct RsSolution {
  std::vector<Vector> alpha_bar;  ///< per kernel, length S
  std::vector<Vector> alpha;      ///< pinv(Kbar_m^{1/2}) alpha_bar_m
  Vector norms;                   ///< ||alpha_bar_m||
  int iterations = 0;
  double final_residual = 0.0;    ///< ||o - alpha_bar||
  bool converged = false;
  // Solver state, kept for warm starts.
  Vector o;
  Vector nu;
};

/// Group-lasso multi-kernel fit by ADMM:
///   alpha_bar_m <- T_{mu S / (2 rho)}(o_m + nu_m)
///   o           <- (Phi^T Phi + rho I)^{-1} [Phi^T y + rho (alpha_bar - nu)]
///   nu          <- nu + o - alpha_bar
/// with Phi = [Kbar_1^{1/2} ... Kbar_M^{1/2}], Kbar_m = Psi K_m Psi^T.
/// Stops when ||o - alpha_bar|| <= eps. Hitting max_iter is not an error:
/// the last iterate is returned with converged = false.
RsSolution rs_admm(const KernelDictionary& dict, const SampleSet& samples, const RsOptions& opts,
                   const RsSolution* warm_start = nullptr);

/// f = sum_m K_m Psi^T alpha_m.
Estimate rs_reconstruct(const KernelDictionary& dict, const SampleSet& samples, const RsSolution& sol);

/// (1/S) ||y - sum_m Kbar_m^{1/2} alpha_bar_m||^2 + mu sum_m ||alpha_bar_m||.
double rs_objective(const KernelDictionary& dict, const SampleSet& samples, double mu,
                    const std::vector<Vector>& alpha_bar);

struct KsOptions {
  double mu = 5e-3;
  Vector theta0;  ///< empty means zeros
  double radius = 1.0;
  double eta = 0.5;
  double eps = 1e-6;
  int max_iter = 2000;
};

struct KsSolution {
  Vector theta;
  Vector alpha;
  int iterations = 0;
  bool converged = false;
};

/// Kernel-superposition fit by the interpolated iteration:
///   alpha <- (Kbar(theta0) + mu S I)^{-1} y, then repeat
///   v_m = alpha^T Kbar_m alpha, theta = theta0 + R v / ||v||,
///   alpha <- eta alpha + (1 - eta) (Kbar(theta) + mu S I)^{-1} y
/// until ||delta alpha|| < eps.
KsSolution ks_iia(const KernelDictionary& dict, const SampleSet& samples, const KsOptions& opts);

/// f = sum_m theta_m K_m Psi^T alpha.
Estimate ks_reconstruct(const KernelDictionary& dict, const SampleSet& samples, const KsSolution& sol);

/// ks_iia with every vertex observed, run per frequency. Each kernel must be
/// diagonal in the eigenbasis of `spec` (to 1e-8 relative), otherwise
/// SpectrumMismatch is thrown.
KsSolution ks_iia_smoothing(const KernelDictionary& dict, const Spectrum& spec, const Vector& y_full,
                            const KsOptions& opts);

struct SparsityPath {
  Matrix norms_sq;        ///< M x G, ||alpha_bar_m||^2 per grid point
  Matrix alpha_norms_sq;  ///< M x G, ||alpha_m||^2 per grid point
  std::vector<int> iterations;
  std::vector<bool> converged;
};

/// rs_admm over an ascending mu grid, warm-starting each point from the last.
SparsityPath sparsity_path(const KernelDictionary& dict, const SampleSet& samples,
                           const std::vector<double>& mu_grid, const RsOptions& opts);

/// Label of the largest norm; ties go to the smaller label. Throws AllZero
/// when every norm is zero.
double naive_bandwidth(const Vector& norms_sq, const std::vector<double>& bandwidths);

}  // namespace gsr
