#include "gsr/config.hpp"

#include "gsr/error.hpp"
#include "gsr/properties.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#ifndef GSR_VERSION
#define GSR_VERSION "unknown"
#endif

namespace gsr {

namespace {

using json = nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(Errc::ConfigError, where.empty() ? what : where + ": " + what);
}

// Reads keys from one JSON object and rejects any key it was not asked about.
class Reader {
 public:
  Reader(const json& obj, std::string where) : obj_(obj), where_(std::move(where)) {
    if (!obj_.is_object()) fail(where_, "expected an object");
  }

  bool has(const std::string& key) const { return obj_.contains(key); }

  const json& node(const std::string& key) {
    seen_.insert(key);
    return obj_.at(key);
  }

  double number(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    const json& v = node(key);
    if (!v.is_number()) fail(path(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) fail(path(key), "must be finite");
    return d;
  }

  Index integer(const std::string& key, Index fallback) {
    if (!has(key)) return fallback;
    const json& v = node(key);
    if (!v.is_number_integer()) fail(path(key), "expected an integer");
    return v.get<Index>();
  }

  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t fallback) {
    if (!has(key)) return fallback;
    const json& v = node(key);
    if (!v.is_number_unsigned()) fail(path(key), "expected a nonnegative integer");
    return v.get<std::uint64_t>();
  }

  bool boolean(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const json& v = node(key);
    if (!v.is_boolean()) fail(path(key), "expected true or false");
    return v.get<bool>();
  }

  std::string string(const std::string& key, std::string fallback) {
    if (!has(key)) return fallback;
    const json& v = node(key);
    if (!v.is_string()) fail(path(key), "expected a string");
    return v.get<std::string>();
  }

  std::vector<double> numbers(const std::string& key, std::vector<double> fallback) {
    if (!has(key)) return fallback;
    const json& v = node(key);
    if (!v.is_array()) fail(path(key), "expected an array of numbers");
    std::vector<double> out;
    for (const json& e : v) {
      if (!e.is_number()) fail(path(key), "expected an array of numbers");
      out.push_back(e.get<double>());
      if (!std::isfinite(out.back())) fail(path(key), "entries must be finite");
    }
    return out;
  }

  std::vector<Index> integers(const std::string& key, std::vector<Index> fallback) {
    if (!has(key)) return fallback;
    const json& v = node(key);
    if (!v.is_array()) fail(path(key), "expected an array of integers");
    std::vector<Index> out;
    for (const json& e : v) {
      if (!e.is_number_integer()) fail(path(key), "expected an array of integers");
      out.push_back(e.get<Index>());
    }
    return out;
  }

  std::vector<std::string> strings(const std::string& key) {
    if (!has(key)) return {};
    const json& v = node(key);
    if (!v.is_array()) fail(path(key), "expected an array of strings");
    std::vector<std::string> out;
    for (const json& e : v) {
      if (!e.is_string()) fail(path(key), "expected an array of strings");
      out.push_back(e.get<std::string>());
    }
    return out;
  }

  std::optional<Reader> object(const std::string& key) {
    if (!has(key)) return std::nullopt;
    return Reader(node(key), path(key));
  }

  void finish() const {
    for (auto it = obj_.begin(); it != obj_.end(); ++it) {
      if (!seen_.count(it.key())) fail(where_, "unknown key '" + it.key() + "'");
    }
  }

  std::string path(const std::string& key) const { return where_.empty() ? key : where_ + "." + key; }

 private:
  const json& obj_;
  std::string where_;
  std::set<std::string> seen_;
};

ExperimentKind parse_kind(const std::string& name) {
  if (name == "nmse_vs_sigma") return ExperimentKind::NmseVsSigma;
  if (name == "nmse_vs_samples") return ExperimentKind::NmseVsSamples;
  if (name == "sparsity_path") return ExperimentKind::SparsityPath;
  if (name == "bandwidth_table") return ExperimentKind::BandwidthTable;
  if (name == "property_suite") return ExperimentKind::PropertySuite;
  fail("experiment", "unknown experiment '" + name + "'");
}

std::vector<Index> range_step(Index first, Index last, Index step) {
  std::vector<Index> out;
  for (Index v = first; v <= last; v += step) out.push_back(v);
  return out;
}

// Reference operating points, used for keys the config leaves out.
ExperimentConfig defaults_for(ExperimentKind kind) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  switch (kind) {
    case ExperimentKind::NmseVsSigma:
      cfg.graph.n = 100;
      cfg.snr_db = 20.0;
      cfg.samples = 40;
      cfg.mu = 1e-4;
      cfg.bandwidths = {5, 10, 20, 40};
      cfg.sigma2_grid = {0.01, 0.03, 0.1, 0.2, 0.3, 0.5, 0.7, 1.0, 2.0, 3.0, 10.0};
      break;
    case ExperimentKind::NmseVsSamples:
      cfg.graph.n = 100;
      cfg.snr_db = 10.0;
      cfg.bandwidth = 20;
      cfg.sample_sizes = range_step(10, 100, 10);
      cfg.ls_bandwidths = {10, 20, 30};
      cfg.rs_dictionary = DictionaryConfig{range_step(10, 30, 5), 1e4, true};
      cfg.rs.mu = 1e-1;
      cfg.ks_dictionary = cfg.rs_dictionary;
      cfg.ks.mu = 5e-3;
      break;
    case ExperimentKind::SparsityPath:
      cfg.graph.n = 250;
      cfg.snr_db = 20.0;
      cfg.bandwidth = 20;
      cfg.samples = 80;
      cfg.trials = 1;
      cfg.dictionary = DictionaryConfig{range_step(10, 90, 5), 1e3, true};
      cfg.mu_grid = {1e-4, 3e-4, 1e-3, 3e-3, 1e-2, 3e-2, 1e-1, 3e-1, 1.0};
      break;
    case ExperimentKind::BandwidthTable:
      cfg.graph.n = 250;
      cfg.snr_db = 20.0;
      cfg.samples = 80;
      cfg.mu = 1e-2;
      cfg.bandwidths = range_step(10, 60, 10);
      cfg.dictionary = DictionaryConfig{range_step(10, 90, 5), 1e3, true};
      break;
    case ExperimentKind::PropertySuite:
      cfg.trials = 1;
      break;
  }
  return cfg;
}

void read_graph(Reader& root, GraphConfig& g) {
  auto r = root.object("graph");
  if (!r) return;
  g.generator = r->string("generator", g.generator);
  if (g.generator == "erdos_renyi") {
    g.n = r->integer("n", g.n);
    g.p = r->number("p", g.p);
    if (!(g.p > 0.0 && g.p <= 1.0)) fail(r->path("p"), "must lie in (0, 1]");
  } else if (g.generator == "circular") {
    g.n = r->integer("n", g.n);
  } else if (g.generator == "edge_list") {
    g.path = r->string("path", "");
    if (g.path.empty()) fail(r->path("path"), "edge_list graphs need a path");
    g.n = 0;
  } else {
    fail(r->path("generator"), "unknown generator '" + g.generator + "'");
  }
  const std::string kind = r->string("laplacian", g.laplacian == LaplacianKind::Normalized ? "normalized"
                                                                                           : "combinatorial");
  try {
    g.laplacian = parse_laplacian_kind(kind);
  } catch (const Error&) {
    fail(r->path("laplacian"), "expected 'combinatorial' or 'normalized'");
  }
  if (g.generator != "edge_list" && g.n < 2) fail(r->path("n"), "must be >= 2");
  r->finish();
}

void read_dictionary(Reader& parent, const std::string& key, DictionaryConfig& d) {
  auto r = parent.object(key);
  if (!r) return;
  d.bandwidths = r->integers("bandwidths", d.bandwidths);
  d.beta = r->number("beta", d.beta);
  d.normalize = r->boolean("normalize", d.normalize);
  if (d.bandwidths.empty()) fail(r->path("bandwidths"), "must not be empty");
  if (!(d.beta > 0.0)) fail(r->path("beta"), "must be positive");
  r->finish();
}

void read_admm(Reader& r, RsOptions& o, bool with_mu) {
  if (with_mu) o.mu = r.number("mu", o.mu);
  o.rho = r.number("rho", o.rho);
  o.eps = r.number("eps", o.eps);
  o.max_iter = static_cast<int>(r.integer("max_iter", o.max_iter));
}

void check_positive(double v, const std::string& where) {
  if (!(v > 0.0)) fail(where, "must be positive");
}

void check_bandwidths(const std::vector<Index>& b, Index n, const std::string& where) {
  if (b.empty()) fail(where, "must not be empty");
  for (Index v : b) {
    if (v < 1 || (n > 0 && v > n)) fail(where, "bandwidth " + std::to_string(v) + " out of range");
  }
}

void check_ascending(const std::vector<double>& g, const std::string& where) {
  if (g.empty()) fail(where, "must not be empty");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i] > 0.0)) fail(where, "entries must be positive");
    if (i > 0 && !(g[i] > g[i - 1])) fail(where, "entries must be strictly ascending");
  }
}

void validate(const ExperimentConfig& c, Index n) {
  if (c.trials < 1) fail("trials", "must be >= 1");
  auto check_samples = [&](Index s, const std::string& where) {
    if (s < 1 || (n > 0 && s > n)) fail(where, "sample count out of range");
  };
  auto check_rs = [&](const RsOptions& o, const std::string& where) {
    check_positive(o.mu, where + ".mu");
    check_positive(o.rho, where + ".rho");
    check_positive(o.eps, where + ".eps");
    if (o.max_iter < 1) fail(where + ".max_iter", "must be >= 1");
  };
  switch (c.kind) {
    case ExperimentKind::NmseVsSigma:
      check_samples(c.samples, "samples");
      check_positive(c.mu, "mu");
      check_bandwidths(c.bandwidths, n, "signal.bandwidths");
      check_ascending(c.sigma2_grid, "sigma2_grid");
      break;
    case ExperimentKind::NmseVsSamples:
      check_bandwidths({c.bandwidth}, n, "signal.bandwidth");
      if (c.sample_sizes.empty()) fail("sample_sizes", "must not be empty");
      for (Index s : c.sample_sizes) check_samples(s, "sample_sizes");
      check_bandwidths(c.ls_bandwidths, n, "ls_bandwidths");
      check_bandwidths(c.rs_dictionary.bandwidths, n, "rs.dictionary.bandwidths");
      check_bandwidths(c.ks_dictionary.bandwidths, n, "ks.dictionary.bandwidths");
      check_rs(c.rs, "rs");
      check_positive(c.ks.mu, "ks.mu");
      check_positive(c.ks.radius, "ks.radius");
      check_positive(c.ks.eps, "ks.eps");
      if (!(c.ks.eta > 0.0 && c.ks.eta < 1.0)) fail("ks.eta", "must lie in (0, 1)");
      if (c.ks.max_iter < 1) fail("ks.max_iter", "must be >= 1");
      break;
    case ExperimentKind::SparsityPath:
      check_bandwidths({c.bandwidth}, n, "signal.bandwidth");
      check_samples(c.samples, "samples");
      check_bandwidths(c.dictionary.bandwidths, n, "dictionary.bandwidths");
      check_ascending(c.mu_grid, "mu_grid");
      check_rs(c.rs, "admm");
      break;
    case ExperimentKind::BandwidthTable:
      check_bandwidths(c.bandwidths, n, "signal.bandwidths");
      check_samples(c.samples, "samples");
      check_positive(c.mu, "mu");
      check_bandwidths(c.dictionary.bandwidths, n, "dictionary.bandwidths");
      check_rs(c.rs, "admm");
      break;
    case ExperimentKind::PropertySuite: {
      const auto known = property_names();
      for (const std::string& p : c.properties) {
        if (std::find(known.begin(), known.end(), p) == known.end()) {
          fail("properties", "unknown property '" + p + "'");
        }
      }
      break;
    }
  }
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::NmseVsSigma: return "nmse_vs_sigma";
    case ExperimentKind::NmseVsSamples: return "nmse_vs_samples";
    case ExperimentKind::SparsityPath: return "sparsity_path";
    case ExperimentKind::BandwidthTable: return "bandwidth_table";
    case ExperimentKind::PropertySuite: return "property_suite";
  }
  return "unknown";
}

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ConfigError, std::string("malformed JSON: ") + e.what());
  }
  Reader root(doc, "");
  if (!root.has("experiment")) fail("", "missing key 'experiment'");
  ExperimentConfig cfg = defaults_for(parse_kind(root.string("experiment", "")));
  cfg.seed = root.unsigned_integer("seed", cfg.seed);

  if (cfg.kind == ExperimentKind::PropertySuite) {
    cfg.properties = root.strings("properties");
    root.finish();
    validate(cfg, 0);
    return cfg;
  }

  cfg.trials = root.integer("trials", cfg.trials);
  read_graph(root, cfg.graph);

  const bool multi_band =
      cfg.kind == ExperimentKind::NmseVsSigma || cfg.kind == ExperimentKind::BandwidthTable;
  if (auto sig = root.object("signal")) {
    cfg.snr_db = sig->number("snr_db", cfg.snr_db);
    if (multi_band) {
      cfg.bandwidths = sig->integers("bandwidths", cfg.bandwidths);
    } else {
      cfg.bandwidth = sig->integer("bandwidth", cfg.bandwidth);
    }
    sig->finish();
  }

  switch (cfg.kind) {
    case ExperimentKind::NmseVsSigma:
      cfg.samples = root.integer("samples", cfg.samples);
      cfg.mu = root.number("mu", cfg.mu);
      cfg.sigma2_grid = root.numbers("sigma2_grid", cfg.sigma2_grid);
      break;
    case ExperimentKind::NmseVsSamples:
      cfg.sample_sizes = root.integers("sample_sizes", cfg.sample_sizes);
      cfg.ls_bandwidths = root.integers("ls_bandwidths", cfg.ls_bandwidths);
      if (auto rs = root.object("rs")) {
        read_admm(*rs, cfg.rs, true);
        read_dictionary(*rs, "dictionary", cfg.rs_dictionary);
        rs->finish();
      }
      if (auto ks = root.object("ks")) {
        cfg.ks.mu = ks->number("mu", cfg.ks.mu);
        cfg.ks.radius = ks->number("radius", cfg.ks.radius);
        cfg.ks.eta = ks->number("eta", cfg.ks.eta);
        cfg.ks.eps = ks->number("eps", cfg.ks.eps);
        cfg.ks.max_iter = static_cast<int>(ks->integer("max_iter", cfg.ks.max_iter));
        read_dictionary(*ks, "dictionary", cfg.ks_dictionary);
        ks->finish();
      }
      break;
    case ExperimentKind::SparsityPath:
    case ExperimentKind::BandwidthTable:
      cfg.samples = root.integer("samples", cfg.samples);
      if (cfg.kind == ExperimentKind::SparsityPath) {
        cfg.mu_grid = root.numbers("mu_grid", cfg.mu_grid);
      } else {
        cfg.mu = root.number("mu", cfg.mu);
      }
      read_dictionary(root, "dictionary", cfg.dictionary);
      if (auto admm = root.object("admm")) {
        read_admm(*admm, cfg.rs, false);
        admm->finish();
      }
      break;
    case ExperimentKind::PropertySuite:
      break;
  }
  root.finish();
  validate(cfg, cfg.graph.n);
  return cfg;
}

void validate_config(const ExperimentConfig& cfg, Index n_vertices) { validate(cfg, n_vertices); }

std::string_view version() noexcept { return GSR_VERSION; }

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ConfigError, "cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

namespace {

ojson dictionary_json(const DictionaryConfig& d) {
  ojson j;
  j["bandwidths"] = d.bandwidths;
  j["beta"] = d.beta;
  j["normalize"] = d.normalize;
  return j;
}

}  // namespace

std::string config_to_json(const ExperimentConfig& c) {
  ojson j;
  j["experiment"] = std::string(to_string(c.kind));
  j["seed"] = c.seed;
  if (c.kind == ExperimentKind::PropertySuite) {
    j["properties"] = c.properties;
    return j.dump(2);
  }
  j["trials"] = c.trials;

  ojson g;
  g["generator"] = c.graph.generator;
  if (c.graph.generator == "edge_list") {
    g["path"] = c.graph.path;
  } else {
    g["n"] = c.graph.n;
  }
  if (c.graph.generator == "erdos_renyi") g["p"] = c.graph.p;
  g["laplacian"] = c.graph.laplacian == LaplacianKind::Normalized ? "normalized" : "combinatorial";
  j["graph"] = g;

  ojson sig;
  sig["snr_db"] = c.snr_db;
  if (c.kind == ExperimentKind::NmseVsSigma || c.kind == ExperimentKind::BandwidthTable) {
    sig["bandwidths"] = c.bandwidths;
  } else {
    sig["bandwidth"] = c.bandwidth;
  }
  j["signal"] = sig;

  auto admm = [&](bool with_mu) {
    ojson a;
    if (with_mu) a["mu"] = c.rs.mu;
    a["rho"] = c.rs.rho;
    a["eps"] = c.rs.eps;
    a["max_iter"] = c.rs.max_iter;
    return a;
  };

  switch (c.kind) {
    case ExperimentKind::NmseVsSigma:
      j["samples"] = c.samples;
      j["mu"] = c.mu;
      j["sigma2_grid"] = c.sigma2_grid;
      break;
    case ExperimentKind::NmseVsSamples: {
      j["sample_sizes"] = c.sample_sizes;
      j["ls_bandwidths"] = c.ls_bandwidths;
      ojson rs = admm(true);
      rs["dictionary"] = dictionary_json(c.rs_dictionary);
      j["rs"] = rs;
      ojson ks;
      ks["mu"] = c.ks.mu;
      ks["radius"] = c.ks.radius;
      ks["eta"] = c.ks.eta;
      ks["eps"] = c.ks.eps;
      ks["max_iter"] = c.ks.max_iter;
      ks["dictionary"] = dictionary_json(c.ks_dictionary);
      j["ks"] = ks;
      break;
    }
    case ExperimentKind::SparsityPath:
      j["samples"] = c.samples;
      j["mu_grid"] = c.mu_grid;
      j["dictionary"] = dictionary_json(c.dictionary);
      j["admm"] = admm(false);
      break;
    case ExperimentKind::BandwidthTable:
      j["samples"] = c.samples;
      j["mu"] = c.mu;
      j["dictionary"] = dictionary_json(c.dictionary);
      j["admm"] = admm(false);
      break;
    case ExperimentKind::PropertySuite:
      break;
  }
  return j.dump(2);
}

}  // namespace gsr
