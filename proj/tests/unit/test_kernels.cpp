#include "gsr/error.hpp"
#include "gsr/graph.hpp"
#include "gsr/kernels.hpp"
#include "gsr/spectral.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "test_util.hpp"

namespace gsr {
namespace {

Spectrum two_vertex() { return eigendecompose(laplacian(Graph::from_edges(2, std::vector<Edge>{{0, 1, 1.0}}))); }

TEST(LaplacianKernel, SingleVertex) {
  const Spectrum s = eigendecompose(Matrix::Zero(1, 1));
  EXPECT_NEAR(laplacian_kernel(s, Diffusion{3.0}).matrix()(0, 0), 1.0, 1e-15);
}

TEST(LaplacianKernel, TwoVertexDiffusionOracle) {
  const Matrix k = laplacian_kernel(two_vertex(), Diffusion{2.0}).matrix();
  Matrix expected(2, 2);
  expected << 0.5676676416183064, 0.43233235838169365, 0.43233235838169365, 0.5676676416183064;
  EXPECT_LT(test::max_abs_diff(k, expected), 1e-15);
}

TEST(LaplacianKernel, UnitTableIsIdentity) {
  const Spectrum s = eigendecompose(laplacian(test::random_graph(12, 2)));
  EXPECT_LT(test::max_abs_diff(laplacian_kernel(s, Table{Vector::Ones(12)}).matrix(), Matrix::Identity(12, 12)),
            1e-10);
}

TEST(LaplacianKernel, EigenvaluesNonincreasingForIncreasingR) {
  const Spectrum s = eigendecompose(laplacian(test::random_graph(18, 6)));
  for (const SpectralFunction& r : {SpectralFunction{Diffusion{0.7}}, SpectralFunction{LaplacianRegularization{2.0}}}) {
    const Vector kd = kernel_spectrum(r, s.eigenvalues);
    for (Index n = 1; n < kd.size(); ++n) EXPECT_LE(kd(n), kd(n - 1) * (1 + 1e-12));
  }
}

TEST(LaplacianKernel, WideDynamicRangeKeepsLowFrequencies) {
  // r spans exp(200 * 4 / 2) ~ 1e173; the zero frequency must still pass.
  const Spectrum s = eigendecompose(laplacian(circular_graph(10)));
  const Matrix k = laplacian_kernel(s, Diffusion{200.0}).matrix();
  EXPECT_NEAR(k(0, 0), 0.1, 1e-12);
  EXPECT_NEAR(k(3, 7), 0.1, 1e-12);
}

TEST(PseudoReciprocal, CutoffZeroAndInfinity) {
  Vector r(4);
  r << 2.0, 0.0, 1e-14, std::numeric_limits<double>::infinity();
  const Vector out = pseudo_reciprocal(r);
  EXPECT_EQ(out(0), 0.5);
  EXPECT_EQ(out(1), 0.0);
  EXPECT_EQ(out(2), 0.0);  // below 1e-12 * max finite r
  EXPECT_EQ(out(3), 0.0);
  r << 1.0, -1.0, 1.0, 1.0;
  EXPECT_THROW(pseudo_reciprocal(r), Error);
}

TEST(Evaluate, FamiliesAndDomains) {
  EXPECT_NEAR(evaluate(Diffusion{2.0}, 0, 1.5), std::exp(1.5), 1e-14);
  EXPECT_NEAR(evaluate(LaplacianRegularization{3.0}, 0, 2.0), 7.0, 1e-15);
  EXPECT_NEAR(evaluate(PStepRandomWalk{3.0, 2}, 0, 1.0), 0.25, 1e-15);
  EXPECT_NEAR(evaluate(Bandlimited{{0, 1}, 10.0}, 1, 5.0), 0.1, 1e-15);
  EXPECT_NEAR(evaluate(Bandlimited{{0, 1}, 10.0}, 2, 5.0), 10.0, 1e-15);
  EXPECT_THROW(evaluate(PStepRandomWalk{1.0, 2}, 0, 0.5), Error);
  EXPECT_TRUE(is_index_based(Table{Vector::Ones(2)}));
  EXPECT_FALSE(is_index_based(Diffusion{1.0}));
}

TEST(BandlimitedKernel, FullBandAndUnitBeta) {
  const Spectrum s = eigendecompose(laplacian(test::random_graph(10, 8)));
  EXPECT_LT(test::max_abs_diff(bandlimited_kernel(s, low_pass_band(10), 7.0).matrix(), 7.0 * Matrix::Identity(10, 10)),
            1e-12);
  EXPECT_LT(test::max_abs_diff(bandlimited_kernel(s, low_pass_band(4), 1.0).matrix(), Matrix::Identity(10, 10)),
            1e-12);
}

TEST(BandlimitedKernel, DictionaryAtomSpectrum) {
  const Spectrum s = eigendecompose(laplacian(erdos_renyi(100, 0.25, 3)));
  const Matrix k = bandlimited_kernel(s, low_pass_band(20), 1e4).matrix();
  const Vector kd = (s.eigenvectors.transpose() * k * s.eigenvectors).diagonal();
  EXPECT_LT((kd.head(20).array() - 1e4).abs().maxCoeff(), 1e-8);
  EXPECT_LT((kd.tail(80).array() - 1e-4).abs().maxCoeff(), 1e-8);
  EXPECT_NEAR(k.trace(), 20 * 1e4 + 80 * 1e-4, 1e-6);
}

TEST(CovarianceKernel, PassThrough) {
  const Matrix c = Vector(Vector::LinSpaced(3, 1, 3)).asDiagonal();
  EXPECT_EQ(covariance_kernel(c).matrix(), c);
  Matrix bad(2, 2);
  bad << 1, 2, 2, 1;
  EXPECT_THROW(covariance_kernel(bad), Error);
}

TEST(AdjacencyKernel, HandInverseAndRoundTrip) {
  EXPECT_LT(test::max_abs_diff(adjacency_kernel(Graph::from_edges(3, {})).matrix(), Matrix::Identity(3, 3)), 1e-15);
  const Graph half(Matrix{{0.0, 0.5}, {0.5, 0.0}});
  Matrix expected(2, 2);
  expected << 2.2222222222222223, 1.777777777777778, 1.777777777777778, 2.2222222222222223;
  EXPECT_LT(test::max_abs_diff(adjacency_kernel(half).matrix(), expected), 1e-14);

  const Graph g = test::random_graph(12, 4);
  const Graph scaled(g.weights() / (2.0 * g.weights().rowwise().sum().maxCoeff()));
  const Matrix a = Matrix::Identity(12, 12) - scaled.weights();
  EXPECT_LT(test::max_abs_diff(adjacency_kernel(scaled).matrix() * (a.transpose() * a), Matrix::Identity(12, 12)),
            1e-9);
}

TEST(HighpassKernel, ClosedForms) {
  EXPECT_LT(test::max_abs_diff(highpass_kernel(Matrix::Zero(3, 3), 1.0).matrix(), Matrix::Identity(3, 3)), 1e-15);
  EXPECT_LT(test::max_abs_diff(highpass_kernel(Matrix::Identity(3, 3), 1.0).matrix(), 0.5 * Matrix::Identity(3, 3)),
            1e-15);
  const Matrix h = Matrix::Random(6, 6);
  const Matrix k = highpass_kernel(h, 1e-3).matrix();
  EXPECT_LT(test::max_abs_diff(k * (h.transpose() * h + 1e-3 * Matrix::Identity(6, 6)), Matrix::Identity(6, 6)), 1e-9);
}

TEST(CirculantKernel, UnitResponseIsIdentity) {
  EXPECT_LT(test::max_abs_diff(circulant_kernel(6, LaplacianRegularization{0.0}).matrix(), Matrix::Identity(6, 6)),
            1e-15);
  EXPECT_THROW(circulant_kernel(6, Table{Vector::Ones(6)}), Error);
}

TEST(CirculantKernel, OracleRowAndSpectralAgreement) {
  const Matrix k = circulant_kernel(8, LaplacianRegularization{1.0}).matrix();
  const double row0[] = {0.44761904761904764, 0.1714285714285714, 0.06666666666666667, 0.02857142857142857,
                         0.01904761904761904, 0.02857142857142856, 0.06666666666666665, 0.1714285714285714};
  for (Index j = 0; j < 8; ++j) EXPECT_NEAR(k(0, j), row0[j], 1e-12);
  for (Index n : {8, 100}) {
    const Spectrum s = eigendecompose(laplacian(circular_graph(n)));
    for (const SpectralFunction& r : {SpectralFunction{Diffusion{1.5}}, SpectralFunction{LaplacianRegularization{4.0}}}) {
      EXPECT_LT(test::max_abs_diff(circulant_kernel(n, r).matrix(), laplacian_kernel(s, r).matrix()), 1e-9);
    }
  }
}

TEST(CirculantKernel, UnimodalColumn) {
  const Matrix k = circulant_kernel(100, Diffusion{10.0}).matrix();
  Index peak = 0;
  k.col(25).maxCoeff(&peak);
  EXPECT_EQ(peak, 25);
  for (Index d = 1; d < 50; ++d) {
    EXPECT_NEAR(k((25 + d) % 100, 25), k((25 - d + 100) % 100, 25), 1e-12);
    EXPECT_LE(k((25 + d) % 100, 25), k((25 + d - 1) % 100, 25) + 1e-15);
  }
}

TEST(NormalizeTrace, Examples) {
  EXPECT_LT(test::max_abs_diff(normalize_trace(KernelMatrix(Matrix::Identity(4, 4), "i")).matrix(),
                               0.25 * Matrix::Identity(4, 4)),
            1e-15);
  const KernelMatrix d(Vector(Vector::LinSpaced(2, 1, 3)).asDiagonal().toDenseMatrix(), "d");
  const KernelMatrix once = normalize_trace(d);
  EXPECT_NEAR(once.matrix()(0, 0), 0.25, 1e-15);
  EXPECT_NEAR(once.matrix()(1, 1), 0.75, 1e-15);
  EXPECT_LT(test::max_abs_diff(normalize_trace(once).matrix(), once.matrix()), 1e-15);
  EXPECT_THROW(normalize_trace(KernelMatrix(Matrix::Zero(2, 2), "z")), Error);
}

TEST(InverseKernel, Polynomial) {
  const Matrix l = laplacian(circular_graph(10));
  const std::vector<double> one{1.0};
  EXPECT_EQ(inverse_kernel_polynomial(l, one).matrix(), Matrix::Identity(10, 10));
  const std::vector<double> sq{1.0, 0.0, 1.0};
  const Matrix ik = inverse_kernel_polynomial(l, sq).matrix();
  EXPECT_LT(test::max_abs_diff(ik, Matrix::Identity(10, 10) + l * l), 1e-12);

  const Graph g = test::random_graph(20, 17);
  const Spectrum s = eigendecompose(laplacian(g));
  const std::vector<double> reg{1.0, 0.8};
  const Matrix k = laplacian_kernel(s, LaplacianRegularization{0.8}).matrix();
  EXPECT_LT(test::max_abs_diff(inverse_kernel_polynomial(laplacian(g), reg).matrix() * k, Matrix::Identity(20, 20)),
            1e-8);
}

TEST(InverseKernel, PiecewiseEigenvalues) {
  const Spectrum s = eigendecompose(laplacian(test::random_graph(20, 23)));
  const Index b = 6;
  Vector tail(20 - b);
  for (Index i = 0; i < tail.size(); ++i) tail(i) = 50.0 + i;
  const double d = 2.0;
  const double eps = 1e-6;
  const Matrix ik = inverse_kernel_piecewise(s, b, d, tail, 0.3, eps).matrix();
  const Vector diag = (s.eigenvectors.transpose() * ik * s.eigenvectors).diagonal();
  for (Index n = 1; n < b; ++n) EXPECT_NEAR(diag(n), d * s.eigenvalues(n) + eps, 1e-9);
  for (Index n = b; n < 20; ++n) EXPECT_NEAR(diag(n), tail(n - b) + eps, 1e-9);
  EXPECT_NEAR(diag(0), 0.3 * 20 + eps, 1e-9);
}

TEST(InverseKernel, RegularizedDefaultEpsilon) {
  const KernelMatrix k(Vector(Vector::LinSpaced(3, 0, 2)).asDiagonal().toDenseMatrix(), "diag");
  const Matrix ik = regularized_inverse(k).matrix();
  const double eps = 1e-8 * (1.0 + 0.5) / 3.0;
  EXPECT_NEAR(ik(0, 0), eps, 1e-20);
  EXPECT_NEAR(ik(1, 1), 1.0 + eps, 1e-15);
  EXPECT_NEAR(ik(2, 2), 0.5 + eps, 1e-15);
}

}  // namespace
}  // namespace gsr
