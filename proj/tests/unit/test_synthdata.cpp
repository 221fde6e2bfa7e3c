#include "gsr/error.hpp"
#include "gsr/graph.hpp"
#include "gsr/rng.hpp"
#include "gsr/synthdata.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace gsr {
namespace {

TEST(Rng, StreamsAreReproducibleAndDistinct) {
  Rng a(5);
  Rng b(5);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(substream_seed(1, 0), substream_seed(1, 1));
  EXPECT_NE(substream_seed(1, 0), substream_seed(2, 0));
  EXPECT_EQ(substream_seed(9, 3), substream_seed(9, 3));
}

TEST(Rng, NormalMoments) {
  Rng r(11);
  double sum = 0.0;
  double sq = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = r.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);
}

class SynthTest : public ::testing::Test {
 protected:
  Spectrum spec = eigendecompose(laplacian(erdos_renyi(30, 0.3, 1)));
};

TEST_F(SynthTest, SingleFrequencyIsConstantDirection) {
  const Vector f = bandlimited_signal(spec, low_pass_band(1), 3);
  EXPECT_LT((f.array() - f(0)).abs().maxCoeff(), 1e-12);
}

TEST_F(SynthTest, SupportedOnBand) {
  const std::vector<Index> band{0, 3, 7};
  const Vector t = gft(spec, bandlimited_signal(spec, band, 4));
  for (Index n = 0; n < 30; ++n) {
    if (n != 0 && n != 3 && n != 7) EXPECT_LT(std::abs(t(n)), 1e-12);
  }
  EXPECT_THROW(bandlimited_signal(spec, std::vector<Index>{}, 1), Error);
  EXPECT_THROW(bandlimited_signal(spec, std::vector<Index>{30}, 1), Error);
}

TEST_F(SynthTest, UniformCoefficientMoments) {
  double sum = 0.0;
  double sq = 0.0;
  const int n = 10000;
  for (int seed = 0; seed < n; ++seed) {
    const double c = gft(spec, bandlimited_signal(spec, std::vector<Index>{5}, static_cast<std::uint64_t>(seed)))(5);
    const double v = std::abs(c);  // eigenvector sign is fixed, coefficient is nonnegative
    sum += v;
    sq += v * v;
  }
  const double mean = sum / n;
  EXPECT_NEAR(mean, 0.5, 0.01);
  EXPECT_NEAR(sq / n - mean * mean, 1.0 / 12.0, 0.005);
}

TEST(AddNoise, VarianceDefinition) {
  const Vector f = Vector::Ones(50);  // ||f||^2 = N
  EXPECT_NEAR(add_noise(f, 0.0, 1).noise_var, 1.0, 1e-15);
  const NoisySignal quiet = add_noise(f, 300.0, 2);
  EXPECT_LT((quiet.noisy - f).norm() / f.norm(), 1e-10);
  EXPECT_THROW(add_noise(Vector::Zero(3), 10.0, 1), Error);
}

TEST(AddNoise, EmpiricalPowerMatches) {
  const Vector f = test::random_vector(40, 3);
  Rng rng(4);
  double total = 0.0;
  double var = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const NoisySignal ns = add_noise(f, 10.0, rng);
    total += (ns.noisy - f).squaredNorm() / 40.0;
    var = ns.noise_var;
  }
  EXPECT_NEAR(total / 1000.0, var, 0.1 * var);
}

TEST(SampleUniform, FullSortedUniform) {
  EXPECT_EQ(sample_uniform(5, 5, 1), (std::vector<Index>{0, 1, 2, 3, 4}));
  EXPECT_EQ(sample_uniform(50, 10, 9), sample_uniform(50, 10, 9));
  const auto s = sample_uniform(50, 10, 9);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  int zeros = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) zeros += sample_uniform(2, 1, seed)[0] == 0;
  EXPECT_NEAR(zeros, 5000, 200);
  EXPECT_THROW(sample_uniform(3, 4, 1), Error);
  EXPECT_THROW(sample_uniform(3, 0, 1), Error);
}

TEST(Nmse, Definitions) {
  const Vector f = test::random_vector(10, 1);
  EXPECT_EQ(nmse(f, std::vector<Vector>{f}), 0.0);
  EXPECT_NEAR(nmse(f, std::vector<Vector>{Vector::Zero(10)}), 1.0, 1e-15);
  EXPECT_NEAR(nmse(f, std::vector<Vector>{2.0 * f}), 1.0, 1e-15);
  NmseAccumulator acc;
  EXPECT_THROW(acc.value(), Error);
  acc.add(f, Vector::Zero(10));
  acc.add(f, f);
  EXPECT_NEAR(acc.value(), 0.5, 1e-15);
  EXPECT_EQ(acc.count(), 2);
}

}  // namespace
}  // namespace gsr
