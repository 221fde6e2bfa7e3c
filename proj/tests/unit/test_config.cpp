#include "gsr/config.hpp"
#include "gsr/error.hpp"

#include <gtest/gtest.h>

namespace gsr {
namespace {

Errc code_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return Errc::InvalidArgument;
}

TEST(Config, DefaultsFollowReferenceOperatingPoints) {
  const ExperimentConfig f3 = parse_config(R"({"experiment": "nmse_vs_samples"})");
  EXPECT_EQ(f3.graph.n, 100);
  EXPECT_EQ(f3.snr_db, 10.0);
  EXPECT_EQ(f3.bandwidth, 20);
  EXPECT_EQ(f3.rs.mu, 0.1);
  EXPECT_EQ(f3.ks.mu, 5e-3);
  EXPECT_EQ(f3.rs_dictionary.bandwidths, (std::vector<Index>{10, 15, 20, 25, 30}));
  EXPECT_EQ(f3.rs_dictionary.beta, 1e4);
  EXPECT_EQ(f3.trials, 100);

  const ExperimentConfig t1 = parse_config(R"({"experiment": "bandwidth_table"})");
  EXPECT_EQ(t1.graph.n, 250);
  EXPECT_EQ(t1.samples, 80);
  EXPECT_EQ(t1.mu, 1e-2);
  EXPECT_EQ(t1.dictionary.bandwidths.size(), 17u);
  EXPECT_EQ(t1.dictionary.beta, 1e3);
}

TEST(Config, UnknownKeysAndBadValuesFail) {
  EXPECT_EQ(code_of(R"({"experiment": "nmse_vs_sigma", "sigma": 1})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"experiment": "nmse_vs_sigma", "graph": {"n": 10, "color": 1}})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"experiment": "warp_drive"})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"seed": 1})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"experiment": "nmse_vs_sigma", "trials": 0})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"experiment": "nmse_vs_sigma", "trials": "ten"})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"experiment": "nmse_vs_sigma", "samples": 500})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"experiment": "sparsity_path", "mu_grid": [1e-2, 1e-3]})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"experiment": "nmse_vs_samples", "rs": {"rho": -1}})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"experiment": "property_suite", "properties": ["nope"]})"), Errc::ConfigError);
  EXPECT_EQ(code_of(R"({"experiment": )"), Errc::ConfigError);
}

TEST(Config, KeysForOtherExperimentsAreRejected) {
  EXPECT_EQ(code_of(R"({"experiment": "nmse_vs_sigma", "mu_grid": [1]})"), Errc::ConfigError);
}

TEST(Config, EchoRoundTrips) {
  for (const char* text :
       {R"({"experiment": "nmse_vs_sigma", "seed": 4, "sigma2_grid": [0.5, 1]})",
        R"({"experiment": "nmse_vs_samples", "rs": {"mu": 7e-4, "dictionary": {"bandwidths": [5, 9], "normalize": false}}})",
        R"({"experiment": "sparsity_path", "graph": {"generator": "circular", "n": 100}, "samples": 20})",
        R"({"experiment": "bandwidth_table", "admm": {"max_iter": 10}})",
        R"({"experiment": "property_suite", "properties": ["filter_recursion"]})"}) {
    const ExperimentConfig a = parse_config(text);
    const std::string echo = config_to_json(a);
    EXPECT_EQ(config_to_json(parse_config(echo)), echo) << text;
  }
}

TEST(Config, ValidateAgainstLoadedGraph) {
  const ExperimentConfig c = parse_config(R"({"experiment": "nmse_vs_sigma", "samples": 40})");
  EXPECT_NO_THROW(validate_config(c, 100));
  EXPECT_THROW(validate_config(c, 30), Error);
}

TEST(Config, Version) { EXPECT_FALSE(version().empty()); }

}  // namespace
}  // namespace gsr
