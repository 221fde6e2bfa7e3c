// gsrecon: run graph-signal reconstruction experiments from JSON configs.
#include "gsr/config.hpp"
#include "gsr/error.hpp"
#include "gsr/experiments.hpp"
#include "gsr/graph.hpp"

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitPropertyFailure = 2;
constexpr int kExitRuntime = 3;

gsr::ExperimentConfig load_checked(const std::string& path) {
  gsr::ExperimentConfig cfg = gsr::load_config(path);
  if (cfg.kind != gsr::ExperimentKind::PropertySuite && cfg.graph.generator == "edge_list") {
    gsr::validate_config(cfg, gsr::read_edge_list_file(cfg.graph.path).size());
  }
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph signal reconstruction experiments"};
  app.set_version_flag("--version", std::string(gsr::version()));
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> trials;
  std::optional<unsigned> threads;
  std::string out_path;

  CLI::App* run = app.add_subcommand("run", "Run the experiment described by a config file");
  run->add_option("config", config_path, "JSON experiment config")->required();
  run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--out", out_path, "Write CSV here instead of stdout");
  run->add_option("--trials", trials, "Override the Monte Carlo trial count")->check(CLI::PositiveNumber);
  run->add_option("--threads", threads, "Worker threads (default: GSRECON_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  CLI::App* validate = app.add_subcommand("validate", "Check a config file and exit");
  validate->add_option("config", config_path, "JSON experiment config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitConfig;
  }

  gsr::ExperimentConfig cfg;
  try {
    cfg = load_checked(config_path);
    if (seed) cfg.seed = *seed;
    if (trials) cfg.trials = static_cast<gsr::Index>(*trials);
  } catch (const gsr::Error& e) {
    std::cerr << "gsrecon: " << e.what() << "\n";
    return kExitConfig;
  }

  if (validate->parsed()) {
    std::cout << "ok: " << gsr::to_string(cfg.kind) << "\n";
    return kExitOk;
  }

  gsr::RunOptions opts;
  opts.threads = threads ? *threads : gsr::default_thread_count();
  gsr::Report report;
  try {
    report = gsr::run_experiment(cfg, opts);
  } catch (const gsr::Error& e) {
    std::cerr << "gsrecon: " << e.what() << "\n";
    const bool config_problem = e.code() == gsr::Errc::ConfigError || e.code() == gsr::Errc::ParseError;
    return config_problem ? kExitConfig : kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "gsrecon: " << e.what() << "\n";
    return kExitRuntime;
  }

  std::ostringstream csv;
  gsr::write_csv(csv, cfg, report);
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!(file << csv.str())) {
      std::cerr << "gsrecon: cannot write " << out_path << "\n";
      return kExitRuntime;
    }
  }

  if (report.failed) {
    std::cerr << "gsrecon: property suite reported failures\n";
    return kExitPropertyFailure;
  }
  return kExitOk;
}
