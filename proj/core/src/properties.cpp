#include "gsr/properties.hpp"

#include "gsr/error.hpp"
#include "gsr/estimators.hpp"
#include "gsr/filters.hpp"
#include "gsr/graph.hpp"
#include "gsr/kernels.hpp"
#include "gsr/mkl.hpp"
#include "gsr/rng.hpp"
#include "gsr/spectral.hpp"
#include "gsr/synthdata.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace gsr {

namespace {

using Check = std::function<PropertyResult(Rng&)>;

PropertyResult verdict(std::string name, double measured, double tol, std::string detail = {}) {
  return PropertyResult{std::move(name), measured <= tol, measured, tol, std::move(detail)};
}

Vector gaussian(Rng& rng, Index n) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.normal();
  return v;
}

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform01(); }

// Weighted random graph on n vertices; the ring edges keep it connected.
Graph random_connected_graph(Rng& rng, Index n, double p) {
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const bool ring = j == i + 1 || (i == 0 && j == n - 1);
      if (ring || rng.uniform01() < p) edges.push_back({i, j, uniform(rng, 0.2, 1.0)});
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<Index> random_subset(Rng& rng, Index n, Index s) { return sample_uniform(n, s, rng); }

SampleSet random_samples(Rng& rng, Index n, Index s) {
  std::vector<Index> idx = random_subset(rng, n, s);
  return SampleSet::make(n, std::move(idx), gaussian(rng, s));
}

Matrix path_precision(Index n) {
  Matrix p = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    p(i, i) = (i == 0 || i == n - 1 ? 1.0 : 2.0) + 0.1;
    if (i + 1 < n) p(i, i + 1) = p(i + 1, i) = -1.0;
  }
  return p;
}

Graph path_graph(Index n) {
  std::vector<Edge> edges;
  for (Index i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
  return Graph::from_edges(n, edges);
}

PropertyResult laplacian_invariants(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const Graph g = random_connected_graph(rng, 12 + rep, 0.3);
    const Matrix l = laplacian(g);
    worst = std::max(worst, (l * Vector::Ones(g.size())).cwiseAbs().maxCoeff());
    for (int k = 0; k < 50; ++k) {
      const Vector f = gaussian(rng, g.size());
      const double quad = f.dot(l * f);
      double pairwise = 0.0;
      for (Index i = 0; i < g.size(); ++i) {
        for (Index j = 0; j < g.size(); ++j) {
          const double d = f(i) - f(j);
          pairwise += 0.5 * g.weights()(i, j) * d * d;
        }
      }
      worst = std::max(worst, std::abs(quad - pairwise) / std::max(1.0, pairwise));
      if (quad < -1e-12) worst = std::max(worst, -quad);
    }
  }
  return verdict("laplacian_invariants", worst, 1e-10);
}

PropertyResult spectral_invariants(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const Matrix l = laplacian(random_connected_graph(rng, 20 + 3 * rep, 0.2));
    const Spectrum spec = eigendecompose(l);
    for (Index n = 1; n < spec.size(); ++n) {
      if (spec.eigenvalues(n) < spec.eigenvalues(n - 1)) worst = std::max(worst, 2.0);
    }
    worst = std::max(worst, (spec.synthesize(spec.eigenvalues) - l).norm() / l.norm() / 1e-8);
    const Vector f = gaussian(rng, spec.size());
    worst = std::max(worst, std::abs(gft(spec, f).norm() - f.norm()) / f.norm() / 1e-10);
  }
  return verdict("spectral_invariants", worst, 1.0, "measured = worst error / its tolerance");
}

PropertyResult kernel_regularizer_identity(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const Spectrum spec = eigendecompose(laplacian(random_connected_graph(rng, 15, 0.3)));
    const SpectralFunction r = rep % 2 == 0 ? SpectralFunction{Diffusion{uniform(rng, 0.2, 1.0)}}
                                            : SpectralFunction{LaplacianRegularization{uniform(rng, 0.5, 3.0)}};
    const KernelMatrix k = laplacian_kernel(spec, r);
    const Vector f = k.matrix() * gaussian(rng, spec.size());
    const double lhs = f.dot(linalg::pinv_symmetric(k.matrix()) * f);
    const Vector ft = gft(spec, f);
    const double rhs = (evaluate(r, spec.eigenvalues).array() * ft.array().square()).sum();
    worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return verdict("kernel_regularizer_identity", worst, 1e-8);
}

PropertyResult circulant_closed_form(Rng&) {
  double worst = 0.0;
  for (Index n : {Index{8}, Index{100}}) {
    const Spectrum spec = eigendecompose(laplacian(circular_graph(n)));
    for (const SpectralFunction& r :
         {SpectralFunction{Diffusion{1.0}}, SpectralFunction{LaplacianRegularization{2.0}}}) {
      const Matrix diff = circulant_kernel(n, r).matrix() - laplacian_kernel(spec, r).matrix();
      worst = std::max(worst, diff.cwiseAbs().maxCoeff());
    }
  }
  return verdict("circulant_closed_form", worst, 1e-9);
}

SpectralFunction random_kernel_function(Rng& rng, Index n) {
  switch (rng.index(3)) {
    case 0: return Diffusion{uniform(rng, 0.1, 2.0)};
    case 1: return LaplacianRegularization{uniform(rng, 0.1, 5.0)};
    default: {
      const Index b = 1 + static_cast<Index>(rng.index(static_cast<std::uint64_t>(n - 1)));
      return Bandlimited{low_pass_band(b), uniform(rng, 2.0, 100.0)};
    }
  }
}

PropertyResult representer_equivalence(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const Index n = 10 + static_cast<Index>(rng.index(21));
    const Spectrum spec = eigendecompose(laplacian(random_connected_graph(rng, n, 0.25)));
    const KernelMatrix k = laplacian_kernel(spec, random_kernel_function(rng, n));
    const Index s = 1 + static_cast<Index>(rng.index(static_cast<std::uint64_t>(n)));
    const SampleSet samples = random_samples(rng, n, s);
    const double mu = rep % 2 == 0 ? 1e-3 : 1e-1;
    const Vector diff = krr(k, samples, mu).values - krr_full(k, samples, mu).values;
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  return verdict("representer_equivalence", worst, 1e-8);
}

PropertyResult coefficient_split(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const Index n = 5 + static_cast<Index>(rng.index(16));
    const Index rank = 1 + static_cast<Index>(rng.index(static_cast<std::uint64_t>(n)));
    Matrix a(n, rank);
    for (Index i = 0; i < n; ++i) a.row(i) = gaussian(rng, rank).transpose();
    const Matrix k = a * a.transpose() / static_cast<double>(n);
    const std::vector<Index> idx = random_subset(rng, n, 1 + static_cast<Index>(rng.index(static_cast<std::uint64_t>(n))));
    const Vector abar = gaussian(rng, n);
    const CoefficientSplit split = split_coefficients(k, idx, abar);
    const Vector k_beta = k * split.beta;
    worst = std::max(worst, linalg::gather(k_beta, idx).cwiseAbs().maxCoeff());
    const Vector recon = linalg::columns(k, idx) * split.alpha + k_beta;
    worst = std::max(worst, (recon - k * abar).cwiseAbs().maxCoeff());
  }
  return verdict("coefficient_split", worst, 1e-10);
}

PropertyResult bandlimited_limit(Rng& rng) {
  const Index n = 30;
  const Index b = 5;
  const Spectrum spec = eigendecompose(laplacian(random_connected_graph(rng, n, 0.25)));
  const std::vector<Index> band = low_pass_band(b);
  const SignalInstance inst = make_instance(spec, band, 20.0, rng.next());
  std::vector<Index> idx;
  for (;;) {
    idx = random_subset(rng, n, 10);
    Matrix rows(10, b);
    const Matrix ub = spec.band_basis(band);
    for (Index s = 0; s < 10; ++s) rows.row(s) = ub.row(idx[s]);
    if (linalg::condition_psd(rows.transpose() * rows) < 1e6) break;
  }
  const SampleSet samples = SampleSet::make(n, idx, linalg::gather(inst.noisy_full, idx));
  const Vector ls = ls_bandlimited(spec, band, samples).values;
  double prev = std::numeric_limits<double>::infinity();
  double last = 0.0;
  bool decreasing = true;
  for (double beta : {1e2, 1e4, 1e6}) {
    const Vector f = krr(bandlimited_kernel(spec, band, beta), samples, 1e-2).values;
    last = (f - ls).norm() / ls.norm();
    if (!(last < prev)) decreasing = false;
    prev = last;
  }
  PropertyResult r = verdict("bandlimited_limit", last, 1e-3);
  if (!decreasing) {
    r.passed = false;
    r.detail = "relative error not decreasing in beta";
  }
  return r;
}

struct Gmrf {
  Matrix precision;
  Matrix covariance;
  Matrix chol_precision_upper;  // P = R^T R
  double noise_var;
};

Gmrf chain_gmrf(Index n, double snr_db) {
  Gmrf g;
  g.precision = path_precision(n);
  g.covariance = g.precision.ldlt().solve(Matrix::Identity(n, n));
  g.covariance = 0.5 * (g.covariance + g.covariance.transpose());
  g.chol_precision_upper = g.precision.llt().matrixU();
  g.noise_var = g.covariance.trace() / (static_cast<double>(n) * std::pow(10.0, snr_db / 10.0));
  return g;
}

// f ~ N(0, P^{-1}): solve R f = z with P = R^T R.
Vector draw_gmrf(const Gmrf& g, Rng& rng) {
  return g.chol_precision_upper.triangularView<Eigen::Upper>().solve(gaussian(rng, g.precision.rows()));
}

PropertyResult covariance_mse_ordering(Rng& rng) {
  const Index n = 40;
  const Index s = 15;
  const int trials = 2000;
  const Gmrf g = chain_gmrf(n, 10.0);
  const double mu = g.noise_var / static_cast<double>(s);
  const Spectrum spec = eigendecompose(laplacian(path_graph(n)));
  const KernelMatrix cov = covariance_kernel(g.covariance);
  std::vector<KernelMatrix> rivals;
  for (double s2 : {1.0, 3.0, 10.0}) rivals.push_back(laplacian_kernel(spec, Diffusion{s2}));

  Matrix diffs(trials, static_cast<Index>(rivals.size()));
  const double sd = std::sqrt(g.noise_var);
  for (int t = 0; t < trials; ++t) {
    const Vector f = draw_gmrf(g, rng);
    std::vector<Index> idx = random_subset(rng, n, s);
    Vector y = linalg::gather(f, idx);
    for (Index i = 0; i < s; ++i) y(i) += sd * rng.normal();
    const SampleSet samples = SampleSet::make(n, std::move(idx), std::move(y));
    const double base = (krr(cov, samples, mu).values - f).squaredNorm() / static_cast<double>(n);
    for (std::size_t k = 0; k < rivals.size(); ++k) {
      const double other = (krr(rivals[k], samples, mu).values - f).squaredNorm() / static_cast<double>(n);
      diffs(t, static_cast<Index>(k)) = base - other;
    }
  }
  // Worst standardized excess of the covariance kernel's MSE over a rival's.
  double worst = -std::numeric_limits<double>::infinity();
  for (Index k = 0; k < diffs.cols(); ++k) {
    const double mean = diffs.col(k).mean();
    const double var = (diffs.col(k).array() - mean).square().sum() / (trials - 1);
    const double se = std::sqrt(var / trials);
    worst = std::max(worst, mean / se);
  }
  return verdict("covariance_mse_ordering", worst, 2.0, "measured = max_k mean(MSE_C - MSE_k) / SE");
}

PropertyResult markov_conditions(Rng& rng) {
  const Index n = 40;
  const Index s = 15;
  const Gmrf g = chain_gmrf(n, 10.0);
  const Vector f = draw_gmrf(g, rng);
  std::vector<Index> idx = random_subset(rng, n, s);
  Vector y = linalg::gather(f, idx);
  for (Index i = 0; i < s; ++i) y(i) += std::sqrt(g.noise_var) * rng.normal();
  const SampleSet samples = SampleSet::make(n, std::move(idx), std::move(y));
  const Estimate est = krr(covariance_kernel(g.covariance), samples, g.noise_var / static_cast<double>(s));
  const MarkovCheck check = markov_residuals(g.covariance, g.noise_var, samples, est);
  return verdict("markov_conditions", check.residuals.cwiseAbs().maxCoeff(), 1e-8);
}

PropertyResult lmmse_equals_krr(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 20; ++rep) {
    const Index n = 20;
    Matrix a(n, n);
    for (Index i = 0; i < n; ++i) a.row(i) = gaussian(rng, n).transpose();
    const Matrix c = a * a.transpose() / static_cast<double>(n);
    const SampleSet samples = random_samples(rng, n, 8);
    const double noise = uniform(rng, 0.01, 1.0);
    const Vector d = lmmse(c, noise, samples).values -
                     krr(covariance_kernel(c), samples, noise / static_cast<double>(samples.size())).values;
    worst = std::max(worst, d.cwiseAbs().maxCoeff());
  }
  return verdict("lmmse_equals_krr", worst, 1e-10);
}

PropertyResult primal_equivalence(Rng& rng) {
  const Index n = 20;
  const Graph g = random_connected_graph(rng, n, 0.25);
  const Matrix l = laplacian(g);
  const Spectrum spec = eigendecompose(l);
  double worst = 0.0;
  for (double s2 : {0.5, 2.0}) {
    const std::vector<double> coeffs = {1.0, s2};
    const InverseKernel kinv = inverse_kernel_polynomial(l, coeffs);
    const KernelMatrix k = laplacian_kernel(spec, LaplacianRegularization{s2});
    const SampleSet samples = random_samples(rng, n, 8);
    const Vector d = primal_estimate(kinv, samples, 1e-2).values - krr(k, samples, 1e-2).values;
    worst = std::max(worst, d.cwiseAbs().maxCoeff() / 1e-7);
  }
  // Piecewise inverse kernel: eigenpairs land where the construction puts them.
  const Index b = 6;
  const double d = 1.5;
  const double d1 = 0.7;
  const double eps = 1e-3;
  Vector tail(n - b);
  for (Index k = 0; k < tail.size(); ++k) tail(k) = uniform(rng, 0.5, 3.0);
  const InverseKernel pw = inverse_kernel_piecewise(spec, b, d, tail, d1, eps);
  for (Index k = 0; k < n; ++k) {
    const Vector u = spec.eigenvectors.col(k);
    const double expected = k == 0 ? d1 * static_cast<double>(n) + eps
                                   : (k < b ? d * spec.eigenvalues(k) + eps : tail(k - b) + eps);
    worst = std::max(worst, (pw.matrix() * u - expected * u).cwiseAbs().maxCoeff() / 1e-9);
  }
  return verdict("primal_equivalence", worst, 1.0, "measured = worst error / its tolerance");
}

PropertyResult filter_recursion(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const Index n = 10;
    const Matrix l = laplacian(random_connected_graph(rng, n, 0.2));
    const Spectrum spec = eigendecompose(l);
    Vector taps(n);
    for (Index k = 0; k < n; ++k) taps(k) = uniform(rng, -1.0, 1.0) / std::pow(2.0, static_cast<double>(k));
    const FilterCoefficients c(taps);
    const Vector y = gaussian(rng, n);
    const Vector spectral = spec.synthesize(frequency_response(c, spec.eigenvalues)) * y;
    worst = std::max(worst, (apply_filter(l, c, y) - spectral).cwiseAbs().maxCoeff() /
                                std::max(1.0, spectral.cwiseAbs().maxCoeff()));
  }
  return verdict("filter_recursion", worst, 1e-8);
}

std::vector<Graph> few_eigenvalue_graphs(Rng& rng) {
  std::vector<Graph> out = {circular_graph(8), circular_graph(12)};
  out.push_back(random_connected_graph(rng, 9, 0.2));
  return out;
}

PropertyResult filter_round_trip_a(Rng& rng) {
  double worst = 0.0;
  for (const Graph& g : few_eigenvalue_graphs(rng)) {
    const Matrix l = laplacian(g);
    const Spectrum spec = eigendecompose(l);
    const SpectralFunction r = Diffusion{1.0};
    const double mu = 0.01;
    const FilterCoefficients c = smoother_to_filter(spec, r, mu);
    for (int k = 0; k < 5; ++k) {
      const Vector y = gaussian(rng, g.size());
      const Vector d = apply_filter(l, c, y) - ridge_smoother(laplacian_kernel(spec, r), y, mu).values;
      worst = std::max(worst, d.cwiseAbs().maxCoeff());
    }
  }
  return verdict("filter_round_trip_a", worst, 1e-6);
}

PropertyResult filter_round_trip_b(Rng& rng) {
  double worst = 0.0;
  for (const Graph& g : few_eigenvalue_graphs(rng)) {
    const Matrix l = laplacian(g);
    const Spectrum spec = eigendecompose(l);
    const double lmax = spec.eigenvalues.maxCoeff();
    Vector taps = Vector::Zero(3);
    taps(0) = uniform(rng, 0.5, 2.0);
    taps(1) = -uniform(rng, 0.2, 0.9) * taps(0) / lmax;
    taps(2) = uniform(rng, 0.0, 0.05) / (lmax * lmax);
    const FilterCoefficients c(taps);
    const double mu = 0.05;
    const FilterKernel fk = filter_to_kernel(c, spec, mu);
    const KernelMatrix k = laplacian_kernel(spec, fk.r);
    for (int rep = 0; rep < 5; ++rep) {
      const Vector y = gaussian(rng, g.size());
      const Vector d = ridge_smoother(k, y, mu).values - apply_filter(l, c, y) / fk.scale;
      worst = std::max(worst, d.cwiseAbs().maxCoeff());
    }
  }
  return verdict("filter_round_trip_b", worst, 1e-8);
}

struct MklInstance {
  KernelDictionary dict;
  SampleSet samples;
};

MklInstance small_mkl_instance(Rng& rng, Index n, Index b_true, Index s, double beta, bool normalize) {
  const Spectrum spec = eigendecompose(laplacian(random_connected_graph(rng, n, 0.25)));
  KernelDictionary dict = bandlimited_dictionary(spec, {5, 10, 15, 20}, beta, normalize);
  const SignalInstance inst = make_instance(spec, low_pass_band(b_true), 20.0, rng.next());
  std::vector<Index> idx = random_subset(rng, n, s);
  Vector y = linalg::gather(inst.noisy_full, idx);
  return MklInstance{std::move(dict), SampleSet::make(n, std::move(idx), std::move(y))};
}

PropertyResult admm_contract(Rng& rng) {
  double worst = 0.0;
  int converged = 0;
  for (int rep = 0; rep < 12; ++rep) {
    const bool normalize = rep % 2 == 0;
    const MklInstance inst = small_mkl_instance(rng, 40, 10, 20, 100.0, normalize);
    const double mu = (normalize ? 1e-3 : 1e-1) * std::pow(3.0, rep % 4);
    RsOptions opts;
    opts.mu = mu;
    const RsSolution sol = rs_admm(inst.dict, inst.samples, opts);
    if (!sol.converged) continue;
    ++converged;
    worst = std::max(worst, sol.final_residual / opts.eps - 1.0);
    const double at_sol = rs_objective(inst.dict, inst.samples, mu, sol.alpha_bar);
    std::vector<Vector> zero(sol.alpha_bar.size(), Vector::Zero(inst.samples.size()));
    const double at_zero = rs_objective(inst.dict, inst.samples, mu, zero);
    worst = std::max(worst, (at_sol - at_zero) / std::max(1.0, at_zero));
  }
  PropertyResult r = verdict("admm_contract", worst, 0.0, std::to_string(converged) + "/12 runs converged");
  if (converged == 0) r.passed = false;
  return r;
}

PropertyResult group_sparsity_monotone(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 3; ++rep) {
    const MklInstance inst = small_mkl_instance(rng, 40, 10, 25, 100.0, false);
    std::vector<double> grid;
    for (int k = 0; k < 12; ++k) grid.push_back(1e-3 * std::pow(2.5, k));
    RsOptions opts;
    opts.eps = 1e-8;
    opts.max_iter = 20000;
    const SparsityPath path = sparsity_path(inst.dict, inst.samples, grid, opts);
    Index prev = path.norms_sq.rows();
    for (Index j = 0; j < path.norms_sq.cols(); ++j) {
      Index support = 0;
      for (Index m = 0; m < path.norms_sq.rows(); ++m) {
        if (std::sqrt(path.norms_sq(m, j)) > 1e-8) ++support;
      }
      if (support > prev) worst = std::max(worst, static_cast<double>(support - prev));
      prev = support;
    }
  }
  return verdict("group_sparsity_monotone", worst, 0.0);
}

PropertyResult ks_invariants(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 5; ++rep) {
    const MklInstance inst = small_mkl_instance(rng, 30, 10, 20, 100.0, true);
    KsOptions opts;
    opts.theta0 = Vector(inst.dict.size());
    for (Index m = 0; m < opts.theta0.size(); ++m) opts.theta0(m) = rep == 0 ? 0.0 : uniform(rng, 0.0, 1.0);
    opts.radius = uniform(rng, 0.5, 2.0);
    const KsSolution sol = ks_iia(inst.dict, inst.samples, opts);
    worst = std::max(worst, std::max(0.0, -sol.theta.minCoeff()));
    worst = std::max(worst, std::abs((sol.theta - opts.theta0).norm() - opts.radius));
  }
  return verdict("ks_invariants", worst, 1e-9);
}

PropertyResult ks_smoothing_equivalence(Rng& rng) {
  const Index n = 30;
  const Spectrum spec = eigendecompose(laplacian(random_connected_graph(rng, n, 0.2)));
  std::vector<KernelMatrix> kernels;
  for (double s2 : {0.5, 1.0, 2.0}) kernels.push_back(laplacian_kernel(spec, Diffusion{s2}));
  const KernelDictionary dict(std::move(kernels), {0.5, 1.0, 2.0});
  const Vector y = gaussian(rng, n);
  std::vector<Index> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), Index{0});
  KsOptions opts;
  opts.mu = 1e-2;
  opts.eps = 1e-12;
  const KsSolution a = ks_iia(dict, SampleSet::make(n, all, y), opts);
  const KsSolution b = ks_iia_smoothing(dict, spec, y, opts);
  const double worst = std::max((a.alpha - b.alpha).cwiseAbs().maxCoeff(), (a.theta - b.theta).cwiseAbs().maxCoeff());
  return verdict("ks_smoothing_equivalence", worst, 1e-8);
}

PropertyResult ls_exact_recovery(Rng& rng) {
  double worst = 0.0;
  for (int rep = 0; rep < 10; ++rep) {
    const Index n = 40;
    const Spectrum spec = eigendecompose(laplacian(random_connected_graph(rng, n, 0.2)));
    const std::vector<Index> band = low_pass_band(5 + rep);
    const Vector f = bandlimited_signal(spec, band, rng);
    std::vector<Index> idx = random_subset(rng, n, 30);
    const SampleSet samples = SampleSet::make(n, idx, linalg::gather(f, idx));
    worst = std::max(worst, (ls_bandlimited(spec, band, samples).values - f).cwiseAbs().maxCoeff());
  }
  return verdict("ls_exact_recovery", worst, 1e-9);
}

const std::vector<std::pair<std::string, Check>>& registry() {
  static const std::vector<std::pair<std::string, Check>> checks = {
      {"laplacian_invariants", laplacian_invariants},
      {"spectral_invariants", spectral_invariants},
      {"kernel_regularizer_identity", kernel_regularizer_identity},
      {"circulant_closed_form", circulant_closed_form},
      {"representer_equivalence", representer_equivalence},
      {"coefficient_split", coefficient_split},
      {"bandlimited_limit", bandlimited_limit},
      {"covariance_mse_ordering", covariance_mse_ordering},
      {"markov_conditions", markov_conditions},
      {"lmmse_equals_krr", lmmse_equals_krr},
      {"primal_equivalence", primal_equivalence},
      {"filter_recursion", filter_recursion},
      {"filter_round_trip_a", filter_round_trip_a},
      {"filter_round_trip_b", filter_round_trip_b},
      {"admm_contract", admm_contract},
      {"group_sparsity_monotone", group_sparsity_monotone},
      {"ks_invariants", ks_invariants},
      {"ks_smoothing_equivalence", ks_smoothing_equivalence},
      {"ls_exact_recovery", ls_exact_recovery},
  };
  return checks;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> out;
  for (const auto& [name, check] : registry()) out.push_back(name);
  return out;
}

PropertyResult run_property(const std::string& name, std::uint64_t seed) {
  const auto& checks = registry();
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (checks[i].first != name) continue;
    Rng rng(substream_seed(seed, i));
    try {
      return checks[i].second(rng);
    } catch (const std::exception& e) {
      return PropertyResult{name, false, std::numeric_limits<double>::quiet_NaN(), 0.0,
                            std::string("threw: ") + e.what()};
    }
  }
  throw Error(Errc::InvalidArgument, "unknown property '" + name + "'");
}

}  // namespace gsr
