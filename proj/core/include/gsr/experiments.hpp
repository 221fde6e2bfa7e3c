#pragma once

#include "gsr/config.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gsr {

/// One CSV line: (sweep point, method, metric).
struct ReportRow {
  std::string experiment;
  std::string sweep_variable;
  std::string sweep_value;
  std::string method;
  std::string metric;
  double value;
  Index trials;
  std::uint64_t seed;
  std::string status;  ///< "ok", "pass", "fail", or an error tag such as "Unidentifiable(12/100)"
};

struct Report {
  std::vector<ReportRow> rows;
  std::vector<std::string> notes;  ///< extra header comments
  bool failed = false;             ///< property suite only
};

struct RunOptions {
  unsigned threads = 1;
};

/// Thread count from GSRECON_THREADS when set to a positive integer, else 1.
unsigned default_thread_count();

/// Runs the configured study. Trials draw from substream_seed(cfg.seed, t)
/// and are reduced in trial order, so the thread count never changes results.
Report run_experiment(const ExperimentConfig& cfg, const RunOptions& opts = {});

/// Shortest round-trip decimal form; "nan", "inf", "-inf" for non-finite values.
std::string format_number(double v);

/// Header comments (version, seed, config echo, notes), column names, rows.
void write_csv(std::ostream& out, const ExperimentConfig& cfg, const Report& report);

}  // namespace gsr
