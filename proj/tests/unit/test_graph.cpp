#include "gsr/error.hpp"
#include "gsr/graph.hpp"
#include "gsr/spectral.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <vector>

#include "test_util.hpp"

namespace gsr {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gsr::Error thrown";
  return Errc::InvalidArgument;
}

TEST(Graph, SingleEdgeIsSymmetric) {
  const std::vector<Edge> edges{{0, 1, 1.0}};
  const Graph g = Graph::from_edges(2, edges);
  Matrix expected(2, 2);
  expected << 0, 1, 1, 0;
  EXPECT_EQ(g.weights(), expected);
  EXPECT_EQ(g.edge_count(), 1);
}

TEST(Graph, EmptyEdgeListGivesZeroWeights) {
  const Graph g = Graph::from_edges(3, {});
  EXPECT_TRUE(g.weights().isZero());
}

TEST(Graph, WeightsAreStoredDirectly) {
  const std::vector<Edge> edges{{0, 1, 2.0}, {1, 2, 0.5}};
  const Graph g = Graph::from_edges(3, edges);
  EXPECT_EQ(g.weights()(0, 1), 2.0);
  EXPECT_EQ(g.weights()(2, 1), 0.5);
  EXPECT_EQ(g.weights()(0, 2), 0.0);
}

TEST(Graph, RejectsInvalidEdges) {
  EXPECT_EQ(code_of([] { Graph::from_edges(2, std::vector<Edge>{{0, 0, 1.0}}); }), Errc::SelfLoop);
  EXPECT_EQ(code_of([] { Graph::from_edges(2, std::vector<Edge>{{0, 2, 1.0}}); }), Errc::IndexOutOfRange);
  EXPECT_EQ(code_of([] { Graph::from_edges(2, std::vector<Edge>{{0, 1, -1.0}}); }), Errc::InvalidWeight);
  EXPECT_EQ(code_of([] { Graph::from_edges(2, std::vector<Edge>{{0, 1, 0.0}}); }), Errc::InvalidWeight);
  EXPECT_EQ(code_of([] { Graph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}, {1, 0, 1.0}}); }),
            Errc::DuplicateEdge);
}

TEST(Graph, RejectsAsymmetricWeights) {
  Matrix w(2, 2);
  w << 0, 1, 2, 0;
  EXPECT_EQ(code_of([&] { Graph{w}; }), Errc::NotSymmetric);
}

TEST(Laplacian, TwoVertexBothKinds) {
  const Graph g = Graph::from_edges(2, std::vector<Edge>{{0, 1, 1.0}});
  Matrix expected(2, 2);
  expected << 1, -1, -1, 1;
  EXPECT_LT(test::max_abs_diff(laplacian(g), expected), 1e-15);
  EXPECT_LT(test::max_abs_diff(laplacian(g, LaplacianKind::Normalized), expected), 1e-15);
}

TEST(Laplacian, TriangleSpectrum) {
  const Graph g = circular_graph(3);
  const Matrix l = laplacian(g);
  EXPECT_LT(test::max_abs_diff(l, 2.0 * Matrix::Identity(3, 3) - g.weights()), 1e-15);
  const Spectrum s = eigendecompose(l);
  EXPECT_NEAR(s.eigenvalues(0), 0.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues(1), 3.0, 1e-12);
  EXPECT_NEAR(s.eigenvalues(2), 3.0, 1e-12);
}

TEST(Laplacian, RowSumsVanishOnRandomGraph) {
  const Matrix l = laplacian(test::random_graph(25, 3));
  EXPECT_LT(l.rowwise().sum().cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT(linalg::asymmetry(l), 1e-15);
}

TEST(Laplacian, NormalizedNeedsPositiveDegrees) {
  const Graph g = Graph::from_edges(3, std::vector<Edge>{{0, 1, 1.0}});
  EXPECT_EQ(code_of([&] { laplacian(g, LaplacianKind::Normalized); }), Errc::ZeroDegreeVertex);
}

TEST(CircularGraph, RingAdjacency) {
  const Graph g = circular_graph(4);
  const Matrix& w = g.weights();
  EXPECT_EQ(w(0, 1), 1.0);
  EXPECT_EQ(w(1, 2), 1.0);
  EXPECT_EQ(w(2, 3), 1.0);
  EXPECT_EQ(w(3, 0), 1.0);
  EXPECT_EQ(w(0, 2), 0.0);
  EXPECT_EQ(w(1, 3), 0.0);
  EXPECT_TRUE((circular_graph(3).degrees().array() == 2.0).all());
}

TEST(CircularGraph, SpectrumMatchesFourierClosedForm) {
  const Spectrum s = eigendecompose(laplacian(circular_graph(100)));
  std::vector<double> expected;
  for (int n = 0; n < 100; ++n) expected.push_back(2.0 * (1.0 - std::cos(2.0 * std::numbers::pi * n / 100.0)));
  std::sort(expected.begin(), expected.end());
  for (Index n = 0; n < 100; ++n) EXPECT_NEAR(s.eigenvalues(n), expected[static_cast<std::size_t>(n)], 1e-9);
  // Oracle: min 0, max 4, sum 200.
  EXPECT_NEAR(s.eigenvalues.sum(), 200.0, 1e-9);
}

TEST(ErdosRenyi, DeterministicPerSeed) {
  EXPECT_EQ(erdos_renyi(10, 0.3, 42).weights(), erdos_renyi(10, 0.3, 42).weights());
  EXPECT_NE(erdos_renyi(30, 0.3, 42).weights(), erdos_renyi(30, 0.3, 43).weights());
}

TEST(ErdosRenyi, EdgeCountWithinFourSigma) {
  // Oracle: mean 1237.5, sd 30.465.
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const double count = static_cast<double>(erdos_renyi(100, 0.25, seed).edge_count());
    EXPECT_LT(std::abs(count - 1237.5), 4.0 * 30.46514401738485) << "seed " << seed;
  }
}

TEST(ErdosRenyi, SingleEdgeIsFairCoin) {
  int present = 0;
  for (std::uint64_t seed = 0; seed < 10000; ++seed) present += erdos_renyi(2, 0.5, seed).edge_count() > 0;
  EXPECT_NEAR(present, 5000, 200);
}

TEST(EdgeList, ParsesCommentsAndRoundTrips) {
  std::istringstream in("# demo\nN 4\n0 1 1.0\n1 2 0.5  # trailing comment\n\n2 3 2\n3 2 2\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.size(), 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.weights()(1, 2), 0.5);
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream back(out.str());
  EXPECT_EQ(read_edge_list(back).weights(), g.weights());
}

TEST(EdgeList, Errors) {
  auto parse = [](const char* text) {
    std::istringstream in(text);
    return read_edge_list(in);
  };
  EXPECT_EQ(code_of([&] { parse("0 1 1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { parse("N 2\n0 1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { parse("N 2\n0 1 1 7\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { parse("N 2\n0 1 1\n1 0 2\n"); }), Errc::DuplicateEdge);
  EXPECT_EQ(code_of([&] { parse("N 2\n0 5 1\n"); }), Errc::IndexOutOfRange);
  EXPECT_EQ(code_of([&] { parse("N 2\n1 1 1\n"); }), Errc::SelfLoop);
}

TEST(Laplacian, ParseKind) {
  EXPECT_EQ(parse_laplacian_kind("combinatorial"), LaplacianKind::Combinatorial);
  EXPECT_EQ(parse_laplacian_kind("normalized"), LaplacianKind::Normalized);
  EXPECT_THROW(parse_laplacian_kind("signless"), Error);
}

}  // namespace
}  // namespace gsr
