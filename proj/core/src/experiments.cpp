#include "gsr/experiments.hpp"

#include "gsr/error.hpp"
#include "gsr/estimators.hpp"
#include "gsr/kernels.hpp"
#include "gsr/mkl.hpp"
#include "gsr/properties.hpp"
#include "gsr/rng.hpp"
#include "gsr/spectral.hpp"
#include "gsr/synthdata.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <thread>

namespace gsr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Substream indices below a trial seed.
constexpr std::uint64_t kGraphStream = 0;
constexpr std::uint64_t kSampleStream = 1;
constexpr std::uint64_t kSignalStream = std::uint64_t{1} << 32;

template <class R>
std::vector<R> run_trials(Index trials, unsigned threads, const std::function<R(Index)>& fn) {
  const auto count = static_cast<std::size_t>(trials);
  std::vector<std::optional<R>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t t = next.fetch_add(1);
      if (t >= count) return;
      try {
        results[t] = fn(static_cast<Index>(t));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const unsigned pool = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(pool);
    for (unsigned i = 0; i < pool; ++i) workers.emplace_back(worker);
    for (std::thread& w : workers) w.join();
  }
  std::vector<R> out;
  out.reserve(count);
  for (std::size_t t = 0; t < count; ++t) {
    if (errors[t]) std::rethrow_exception(errors[t]);
    out.push_back(std::move(*results[t]));
  }
  return out;
}

struct TrialGraph {
  Spectrum spec;
  Index n;
};

class GraphSource {
 public:
  explicit GraphSource(const GraphConfig& cfg) : cfg_(cfg) {
    if (cfg_.generator == "edge_list") {
      const Graph g = read_edge_list_file(cfg_.path);
      fixed_ = eigendecompose(laplacian(g, cfg_.laplacian));
    }
  }

  Index size() const { return fixed_ ? fixed_->size() : cfg_.n; }

  Spectrum spectrum(std::uint64_t trial_seed) const {
    if (fixed_) return *fixed_;
    const std::uint64_t seed = substream_seed(trial_seed, kGraphStream);
    const Graph g = cfg_.generator == "circular" ? circular_graph(cfg_.n) : erdos_renyi(cfg_.n, cfg_.p, seed);
    return eigendecompose(laplacian(g, cfg_.laplacian));
  }

 private:
  GraphConfig cfg_;
  std::optional<Spectrum> fixed_;
};

std::string index_str(Index v) { return std::to_string(v); }

SampleSet draw_samples(const Vector& noisy_full, Index s, std::uint64_t seed) {
  std::vector<Index> idx = sample_uniform(noisy_full.size(), s, seed);
  Vector y = linalg::gather(noisy_full, idx);
  return SampleSet::make(noisy_full.size(), std::move(idx), std::move(y));
}

// Squared error and truth energy of one estimate, or the error that stopped it.
struct Outcome {
  double err = 0.0;
  double energy = 0.0;
  std::optional<Errc> failure;
  bool nonconverged = false;
};

Outcome score(const Vector& truth, const Vector& estimate) {
  return Outcome{(truth - estimate).squaredNorm(), truth.squaredNorm(), std::nullopt, false};
}

struct Aggregate {
  double value;
  std::string status;
  Index nonconverged;
};

Aggregate aggregate(const std::vector<const Outcome*>& outs) {
  double err = 0.0;
  double energy = 0.0;
  Index failures = 0;
  Index nonconverged = 0;
  std::optional<Errc> first;
  for (const Outcome* o : outs) {
    if (o->failure) {
      ++failures;
      if (!first) first = o->failure;
      continue;
    }
    err += o->err;
    energy += o->energy;
    if (o->nonconverged) ++nonconverged;
  }
  if (failures > 0) {
    return Aggregate{kNaN,
                     std::string(to_string(*first)) + "(" + std::to_string(failures) + "/" +
                         std::to_string(outs.size()) + ")",
                     nonconverged};
  }
  if (!(energy > 0.0)) return Aggregate{kNaN, "ZeroDenominator", nonconverged};
  return Aggregate{err / energy, "ok", nonconverged};
}

ReportRow row(const ExperimentConfig& cfg, std::string var, std::string val, std::string method,
              std::string metric, double value, Index trials, std::string status = "ok") {
  return ReportRow{std::string(to_string(cfg.kind)), std::move(var), std::move(val), std::move(method),
                   std::move(metric), value, trials, cfg.seed, std::move(status)};
}

Report run_nmse_vs_sigma(const ExperimentConfig& cfg, const RunOptions& opts) {
  const GraphSource graphs(cfg.graph);
  validate_config(cfg, graphs.size());
  const Index nb = static_cast<Index>(cfg.bandwidths.size());
  const Index ns = static_cast<Index>(cfg.sigma2_grid.size());
  using TrialResult = std::vector<Outcome>;  // index b * ns + s

  const auto trials = run_trials<TrialResult>(cfg.trials, opts.threads, [&](Index t) {
    const std::uint64_t trial_seed = substream_seed(cfg.seed, static_cast<std::uint64_t>(t));
    const Spectrum spec = graphs.spectrum(trial_seed);
    std::vector<KernelMatrix> kernels;
    for (double s2 : cfg.sigma2_grid) kernels.push_back(laplacian_kernel(spec, Diffusion{s2}));
    TrialResult out(static_cast<std::size_t>(nb * ns));
    for (Index b = 0; b < nb; ++b) {
      const SignalInstance inst =
          make_instance(spec, low_pass_band(cfg.bandwidths[b]), cfg.snr_db,
                        substream_seed(trial_seed, kSignalStream + static_cast<std::uint64_t>(b)));
      const SampleSet samples = draw_samples(inst.noisy_full, cfg.samples, substream_seed(trial_seed, kSampleStream));
      for (Index s = 0; s < ns; ++s) {
        out[static_cast<std::size_t>(b * ns + s)] = score(inst.truth, krr(kernels[s], samples, cfg.mu).values);
      }
    }
    return out;
  });

  Report report;
  for (Index b = 0; b < nb; ++b) {
    for (Index s = 0; s < ns; ++s) {
      std::vector<const Outcome*> outs;
      for (const TrialResult& tr : trials) outs.push_back(&tr[static_cast<std::size_t>(b * ns + s)]);
      const Aggregate agg = aggregate(outs);
      report.rows.push_back(row(cfg, "sigma2", format_number(cfg.sigma2_grid[s]),
                                "krr_diffusion_B" + index_str(cfg.bandwidths[b]), "nmse", agg.value,
                                cfg.trials, agg.status));
    }
  }
  return report;
}

template <class F>
Outcome guarded(F&& estimate) {
  try {
    return estimate();
  } catch (const Error& e) {
    Outcome o;
    o.failure = e.code();
    return o;
  }
}

Report run_nmse_vs_samples(const ExperimentConfig& cfg, const RunOptions& opts) {
  const GraphSource graphs(cfg.graph);
  validate_config(cfg, graphs.size());
  std::vector<std::string> methods = {"rs_mkl", "ks_mkl"};
  for (Index b : cfg.ls_bandwidths) methods.push_back("ls_B" + index_str(b));
  const Index nm = static_cast<Index>(methods.size());
  const Index nsz = static_cast<Index>(cfg.sample_sizes.size());
  using TrialResult = std::vector<Outcome>;  // index s * nm + method

  const auto trials = run_trials<TrialResult>(cfg.trials, opts.threads, [&](Index t) {
    const std::uint64_t trial_seed = substream_seed(cfg.seed, static_cast<std::uint64_t>(t));
    const Spectrum spec = graphs.spectrum(trial_seed);
    const KernelDictionary rs_dict = bandlimited_dictionary(spec, cfg.rs_dictionary.bandwidths,
                                                            cfg.rs_dictionary.beta, cfg.rs_dictionary.normalize);
    const KernelDictionary ks_dict = bandlimited_dictionary(spec, cfg.ks_dictionary.bandwidths,
                                                            cfg.ks_dictionary.beta, cfg.ks_dictionary.normalize);
    const SignalInstance inst = make_instance(spec, low_pass_band(cfg.bandwidth), cfg.snr_db,
                                              substream_seed(trial_seed, kSignalStream));
    TrialResult out(static_cast<std::size_t>(nsz * nm));
    for (Index si = 0; si < nsz; ++si) {
      const SampleSet samples =
          draw_samples(inst.noisy_full, cfg.sample_sizes[si],
                       substream_seed(trial_seed, kSampleStream + static_cast<std::uint64_t>(cfg.sample_sizes[si])));
      auto slot = [&](Index m) -> Outcome& { return out[static_cast<std::size_t>(si * nm + m)]; };
      slot(0) = guarded([&] {
        const RsSolution sol = rs_admm(rs_dict, samples, cfg.rs);
        Outcome o = score(inst.truth, rs_reconstruct(rs_dict, samples, sol).values);
        o.nonconverged = !sol.converged;
        return o;
      });
      slot(1) = guarded([&] {
        const KsSolution sol = ks_iia(ks_dict, samples, cfg.ks);
        Outcome o = score(inst.truth, ks_reconstruct(ks_dict, samples, sol).values);
        o.nonconverged = !sol.converged;
        return o;
      });
      for (Index l = 0; l < static_cast<Index>(cfg.ls_bandwidths.size()); ++l) {
        slot(2 + l) = guarded([&] {
          const std::vector<Index> band = low_pass_band(cfg.ls_bandwidths[l]);
          return score(inst.truth, ls_bandlimited(spec, band, samples).values);
        });
      }
    }
    return out;
  });

  Report report;
  report.notes.push_back("cutoff-frequency LS baseline omitted (out of scope)");
  for (Index si = 0; si < nsz; ++si) {
    for (Index m = 0; m < nm; ++m) {
      std::vector<const Outcome*> outs;
      for (const TrialResult& tr : trials) outs.push_back(&tr[static_cast<std::size_t>(si * nm + m)]);
      const Aggregate agg = aggregate(outs);
      const std::string s = index_str(cfg.sample_sizes[si]);
      report.rows.push_back(row(cfg, "S", s, methods[m], "nmse", agg.value, cfg.trials, agg.status));
      if (m < 2) {
        report.rows.push_back(row(cfg, "S", s, methods[m], "nonconverged",
                                  static_cast<double>(agg.nonconverged), cfg.trials));
      }
    }
  }
  return report;
}

// Label of the kernel that survives longest along the path, or NaN.
double last_to_vanish(const Matrix& norms_sq, const std::vector<double>& labels, Index* column) {
  for (Index j = norms_sq.cols() - 1; j >= 0; --j) {
    if (norms_sq.col(j).maxCoeff() > 0.0) {
      if (column != nullptr) *column = j;
      return naive_bandwidth(norms_sq.col(j), labels);
    }
  }
  return kNaN;
}

Report run_sparsity_path(const ExperimentConfig& cfg, const RunOptions& opts) {
  const GraphSource graphs(cfg.graph);
  validate_config(cfg, graphs.size());
  struct TrialResult {
    SparsityPath path;
    std::vector<double> labels;
  };
  const auto trials = run_trials<TrialResult>(cfg.trials, opts.threads, [&](Index t) {
    const std::uint64_t trial_seed = substream_seed(cfg.seed, static_cast<std::uint64_t>(t));
    const Spectrum spec = graphs.spectrum(trial_seed);
    const KernelDictionary dict =
        bandlimited_dictionary(spec, cfg.dictionary.bandwidths, cfg.dictionary.beta, cfg.dictionary.normalize);
    const SignalInstance inst = make_instance(spec, low_pass_band(cfg.bandwidth), cfg.snr_db,
                                              substream_seed(trial_seed, kSignalStream));
    const SampleSet samples = draw_samples(inst.noisy_full, cfg.samples, substream_seed(trial_seed, kSampleStream));
    return TrialResult{sparsity_path(dict, samples, cfg.mu_grid, cfg.rs), dict.labels()};
  });

  Report report;
  const TrialResult& first = trials.front();
  const Index g = static_cast<Index>(cfg.mu_grid.size());
  for (Index j = 0; j < g; ++j) {
    const std::string mu = format_number(cfg.mu_grid[j]);
    for (Index m = 0; m < static_cast<Index>(first.labels.size()); ++m) {
      const std::string method = "kernel_B" + format_number(first.labels[m]);
      report.rows.push_back(row(cfg, "mu", mu, method, "alpha_bar_norm_sq", first.path.norms_sq(m, j), 1));
      report.rows.push_back(row(cfg, "mu", mu, method, "alpha_norm_sq", first.path.alpha_norms_sq(m, j), 1));
    }
    report.rows.push_back(row(cfg, "mu", mu, "admm", "nonconverged",
                              first.path.converged[static_cast<std::size_t>(j)] ? 0.0 : 1.0, 1));
  }
  Index column = -1;
  const double last = last_to_vanish(first.path.norms_sq, first.labels, &column);
  report.rows.push_back(row(cfg, "mu", column >= 0 ? format_number(cfg.mu_grid[column]) : "none", "path",
                            "last_to_vanish", last, 1, std::isnan(last) ? "AllZero" : "ok"));
  if (cfg.trials > 1) {
    Index matches = 0;
    for (const TrialResult& tr : trials) {
      if (last_to_vanish(tr.path.norms_sq, tr.labels, nullptr) == static_cast<double>(cfg.bandwidth)) ++matches;
    }
    report.rows.push_back(row(cfg, "mu", "all", "path", "last_to_vanish_match_rate",
                              static_cast<double>(matches) / static_cast<double>(cfg.trials), cfg.trials));
  }
  return report;
}

Report run_bandwidth_table(const ExperimentConfig& cfg, const RunOptions& opts) {
  const GraphSource graphs(cfg.graph);
  validate_config(cfg, graphs.size());
  const Index nb = static_cast<Index>(cfg.bandwidths.size());
  struct Estimates {
    double from_alpha_bar = kNaN;
    double from_alpha = kNaN;
    bool converged = true;
  };
  using TrialResult = std::vector<Estimates>;

  const auto trials = run_trials<TrialResult>(cfg.trials, opts.threads, [&](Index t) {
    const std::uint64_t trial_seed = substream_seed(cfg.seed, static_cast<std::uint64_t>(t));
    const Spectrum spec = graphs.spectrum(trial_seed);
    const KernelDictionary dict =
        bandlimited_dictionary(spec, cfg.dictionary.bandwidths, cfg.dictionary.beta, cfg.dictionary.normalize);
    RsOptions rs = cfg.rs;
    rs.mu = cfg.mu;
    TrialResult out(static_cast<std::size_t>(nb));
    for (Index b = 0; b < nb; ++b) {
      const SignalInstance inst =
          make_instance(spec, low_pass_band(cfg.bandwidths[b]), cfg.snr_db,
                        substream_seed(trial_seed, kSignalStream + static_cast<std::uint64_t>(b)));
      const SampleSet samples = draw_samples(inst.noisy_full, cfg.samples, substream_seed(trial_seed, kSampleStream));
      const RsSolution sol = rs_admm(dict, samples, rs);
      Vector bar_sq(dict.size());
      Vector alpha_sq(dict.size());
      for (Index m = 0; m < dict.size(); ++m) {
        bar_sq(m) = sol.norms(m) * sol.norms(m);
        alpha_sq(m) = sol.alpha[m].squaredNorm();
      }
      Estimates& e = out[static_cast<std::size_t>(b)];
      e.converged = sol.converged;
      try {
        e.from_alpha_bar = naive_bandwidth(bar_sq, dict.labels());
        e.from_alpha = naive_bandwidth(alpha_sq, dict.labels());
      } catch (const Error& err) {
        if (err.code() != Errc::AllZero) throw;
      }
    }
    return out;
  });

  Report report;
  report.notes.push_back("bias = mean |B - B_hat|, std = population standard deviation of B_hat");
  report.notes.push_back("naive_alpha_bar ranks ||alpha_bar_m||^2; naive_alpha ranks ||alpha_m||^2");
  for (Index b = 0; b < nb; ++b) {
    const double truth = static_cast<double>(cfg.bandwidths[b]);
    const std::string bs = index_str(cfg.bandwidths[b]);
    for (int variant = 0; variant < 2; ++variant) {
      std::vector<double> est;
      Index nonconverged = 0;
      for (const TrialResult& tr : trials) {
        const Estimates& e = tr[static_cast<std::size_t>(b)];
        const double v = variant == 0 ? e.from_alpha_bar : e.from_alpha;
        if (!e.converged) ++nonconverged;
        if (!std::isnan(v)) est.push_back(v);
      }
      const std::string method = variant == 0 ? "naive_alpha_bar" : "naive_alpha";
      const Index failed = cfg.trials - static_cast<Index>(est.size());
      double bias = kNaN;
      double sd = kNaN;
      if (!est.empty()) {
        double abs_sum = 0.0;
        double sum = 0.0;
        for (double v : est) {
          abs_sum += std::abs(truth - v);
          sum += v;
        }
        const double k = static_cast<double>(est.size());
        const double mean = sum / k;
        double var = 0.0;
        for (double v : est) var += (v - mean) * (v - mean);
        bias = abs_sum / k;
        sd = std::sqrt(var / k);
      }
      const std::string status = est.empty() ? "AllZero(" + std::to_string(failed) + "/" +
                                                   std::to_string(cfg.trials) + ")"
                                             : "ok";
      report.rows.push_back(row(cfg, "B", bs, method, "bias", bias, cfg.trials, status));
      report.rows.push_back(row(cfg, "B", bs, method, "std", sd, cfg.trials, status));
      report.rows.push_back(row(cfg, "B", bs, method, "failed_trials", static_cast<double>(failed), cfg.trials));
      if (variant == 0) {
        report.rows.push_back(
            row(cfg, "B", bs, "admm", "nonconverged", static_cast<double>(nonconverged), cfg.trials));
      }
    }
  }
  return report;
}

Report run_property_suite(const ExperimentConfig& cfg, const RunOptions& opts) {
  const std::vector<std::string> names = cfg.properties.empty() ? property_names() : cfg.properties;
  const auto results = run_trials<PropertyResult>(
      static_cast<Index>(names.size()), opts.threads,
      [&](Index i) { return run_property(names[static_cast<std::size_t>(i)], cfg.seed); });
  Report report;
  for (const PropertyResult& r : results) {
    report.rows.push_back(row(cfg, "property", r.name, r.name, "deviation", r.measured, 1,
                              r.passed ? "pass" : "fail"));
    report.notes.push_back(r.name + ": " + (r.passed ? "pass" : "FAIL") + " (measured " +
                           format_number(r.measured) + ", tolerance " + format_number(r.tolerance) + ")" +
                           (r.detail.empty() ? "" : " " + r.detail));
    if (!r.passed) report.failed = true;
  }
  return report;
}

}  // namespace

unsigned default_thread_count() {
  if (const char* env = std::getenv("GSRECON_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

Report run_experiment(const ExperimentConfig& cfg, const RunOptions& opts) {
  switch (cfg.kind) {
    case ExperimentKind::NmseVsSigma: return run_nmse_vs_sigma(cfg, opts);
    case ExperimentKind::NmseVsSamples: return run_nmse_vs_samples(cfg, opts);
    case ExperimentKind::SparsityPath: return run_sparsity_path(cfg, opts);
    case ExperimentKind::BandwidthTable: return run_bandwidth_table(cfg, opts);
    case ExperimentKind::PropertySuite: return run_property_suite(cfg, opts);
  }
  throw Error(Errc::ConfigError, "unknown experiment kind");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const ExperimentConfig& cfg, const Report& report) {
  out << "# gsrecon " << version() << "\n";
  out << "# experiment: " << to_string(cfg.kind) << "\n";
  out << "# seed: " << cfg.seed << "\n";
  for (const std::string& note : report.notes) out << "# note: " << note << "\n";
  out << "# config:\n";
  std::istringstream echo(config_to_json(cfg));
  for (std::string line; std::getline(echo, line);) out << "#   " << line << "\n";
  out << "experiment,sweep_variable,sweep_value,method,metric,value,trials,seed,status\n";
  for (const ReportRow& r : report.rows) {
    out << r.experiment << ',' << r.sweep_variable << ',' << r.sweep_value << ',' << r.method << ','
        << r.metric << ',' << format_number(r.value) << ',' << r.trials << ',' << r.seed << ',' << r.status
        << '\n';
  }
}

}  // namespace gsr
