#pragma once

#include "gsr/graph.hpp"
#include "gsr/mkl.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace gsr {

enum class ExperimentKind { NmseVsSigma, NmseVsSamples, SparsityPath, BandwidthTable, PropertySuite };

std::string_view to_string(ExperimentKind kind);

struct GraphConfig {
  std::string generator = "erdos_renyi";  ///< erdos_renyi | circular | edge_list
  Index n = 100;
  double p = 0.25;
  std::string path;  ///< edge_list only
  LaplacianKind laplacian = LaplacianKind::Combinatorial;
};

struct DictionaryConfig {
  std::vector<Index> bandwidths;
  double beta = 1e4;
  bool normalize = true;
};

/// Parsed experiment description. Fields that do not apply to `kind` keep
/// their defaults and are not echoed.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::PropertySuite;
  std::uint64_t seed = 1;
  Index trials = 100;
  GraphConfig graph;
  double snr_db = 20.0;

  Index bandwidth = 20;                 // nmse_vs_samples, sparsity_path
  std::vector<Index> bandwidths;        // nmse_vs_sigma, bandwidth_table
  Index samples = 40;                   // nmse_vs_sigma, sparsity_path, bandwidth_table
  double mu = 1e-4;                     // nmse_vs_sigma, bandwidth_table
  std::vector<double> sigma2_grid;      // nmse_vs_sigma
  std::vector<Index> sample_sizes;      // nmse_vs_samples
  std::vector<Index> ls_bandwidths;     // nmse_vs_samples
  DictionaryConfig rs_dictionary;       // nmse_vs_samples
  RsOptions rs;                         // nmse_vs_samples; admm settings elsewhere
  DictionaryConfig ks_dictionary;       // nmse_vs_samples
  KsOptions ks;                         // nmse_vs_samples
  DictionaryConfig dictionary;          // sparsity_path, bandwidth_table
  std::vector<double> mu_grid;          // sparsity_path
  std::vector<std::string> properties;  // property_suite; empty means all
};

/// Parses a JSON document. Unknown keys, wrong types and out-of-range values
/// throw Error(ConfigError) naming the offending key.
ExperimentConfig parse_config(std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Re-checks size-dependent fields (bandwidths, sample counts) against a
/// graph of n_vertices; used once an edge-list graph has been loaded.
void validate_config(const ExperimentConfig& cfg, Index n_vertices);

/// Library version string.
std::string_view version() noexcept;

/// Full configuration, defaults included, as pretty-printed JSON. Parsing
/// the result yields an identical configuration.
std::string config_to_json(const ExperimentConfig& cfg);

}  // namespace gsr
