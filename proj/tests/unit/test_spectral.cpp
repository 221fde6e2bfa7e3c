#include "gsr/error.hpp"
#include "gsr/graph.hpp"
#include "gsr/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "test_util.hpp"

namespace gsr {
namespace {

TEST(Eigendecompose, IdentityUnderSignConvention) {
  const Spectrum s = eigendecompose(Matrix::Identity(4, 4));
  EXPECT_TRUE(s.eigenvalues.isOnes(1e-15));
  // Each column is +-e_k up to basis choice; the sign rule makes the largest entry positive.
  for (Index k = 0; k < 4; ++k) EXPECT_GT(s.eigenvectors.col(k).maxCoeff(), 0.0);
  EXPECT_LT(test::max_abs_diff(s.eigenvectors.transpose() * s.eigenvectors, Matrix::Identity(4, 4)), 1e-14);
}

TEST(Eigendecompose, TwoVertexLaplacian) {
  Matrix l(2, 2);
  l << 1, -1, -1, 1;
  const Spectrum s = eigendecompose(l);
  EXPECT_NEAR(s.eigenvalues(0), 0.0, 1e-15);
  EXPECT_NEAR(s.eigenvalues(1), 2.0, 1e-15);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(s.eigenvectors(0, 0), h, 1e-15);
  EXPECT_NEAR(s.eigenvectors(1, 0), h, 1e-15);
  // Tie in magnitude: the lower index carries the positive sign.
  EXPECT_NEAR(s.eigenvectors(0, 1), h, 1e-15);
  EXPECT_NEAR(s.eigenvectors(1, 1), -h, 1e-15);
}

TEST(Eigendecompose, RejectsIndefiniteAndAsymmetric) {
  Matrix a(2, 2);
  a << -1, 0, 0, 1;
  EXPECT_THROW(eigendecompose(a), Error);
  a << 1, 0.5, 0, 1;
  EXPECT_THROW(eigendecompose(a), Error);
}

TEST(Eigendecompose, ReconstructsRandomLaplacian) {
  const Matrix l = laplacian(test::random_graph(30, 11));
  const Spectrum s = eigendecompose(l);
  EXPECT_LT(test::max_abs_diff(s.synthesize(s.eigenvalues), l), 1e-11);
  for (Index n = 1; n < s.size(); ++n) EXPECT_LE(s.eigenvalues(n - 1), s.eigenvalues(n));
}

class GftTest : public ::testing::Test {
 protected:
  Spectrum spec = eigendecompose(laplacian(test::random_graph(20, 5)));
};

TEST_F(GftTest, EigenvectorMapsToUnitVector) {
  for (Index k : {0, 7, 19}) {
    const Vector e = gft(spec, spec.eigenvectors.col(k));
    EXPECT_LT((e - Vector::Unit(20, k)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((igft(spec, Vector::Unit(20, k)) - spec.eigenvectors.col(k)).norm(), 1e-15);
  }
  EXPECT_TRUE(gft(spec, Vector::Zero(20)).isZero());
}

TEST_F(GftTest, RoundTrips) {
  const Vector f = test::random_vector(20, 9);
  EXPECT_LT((igft(spec, gft(spec, f)) - f).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((gft(spec, igft(spec, f)) - f).cwiseAbs().maxCoeff(), 1e-12);
}

TEST_F(GftTest, ConstantLivesAtZeroFrequency) {
  const Vector c = Vector::Constant(20, 1.0 / std::sqrt(20.0));
  const Vector t = gft(spec, c);
  EXPECT_NEAR(std::abs(t(0)), 1.0, 1e-12);
  EXPECT_LT(t.tail(19).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Smoothness, ConstantEigenvectorAndDoubleSum) {
  const Graph g = test::random_graph(15, 21);
  const Spectrum spec = eigendecompose(laplacian(g));
  EXPECT_NEAR(smoothness(g, Vector::Ones(15)), 0.0, 1e-12);
  for (Index n : {1, 8, 14}) EXPECT_NEAR(smoothness(g, spec.eigenvectors.col(n)), spec.eigenvalues(n), 1e-10);
  const Vector f = test::random_vector(15, 4);
  double direct = 0.0;
  for (Index i = 0; i < 15; ++i) {
    for (Index j = 0; j < 15; ++j) direct += 0.5 * g.weights()(i, j) * std::pow(f(i) - f(j), 2);
  }
  EXPECT_NEAR(smoothness(g, f), direct, 1e-10 * direct);
}

TEST(DistinctGroups, RingMultiplicities) {
  const Spectrum s = eigendecompose(laplacian(circular_graph(4)));
  // {0, 2, 2, 4}
  EXPECT_EQ(distinct_eigenvalue_groups(s.eigenvalues), (std::vector<Index>{0, 1, 3}));
}

TEST(LowPassBand, FirstIndices) {
  EXPECT_EQ(low_pass_band(3), (std::vector<Index>{0, 1, 2}));
}

}  // namespace
}  // namespace gsr
