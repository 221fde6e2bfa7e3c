#include "gsr/graph.hpp"

#include "gsr/error.hpp"
#include "gsr/rng.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

namespace gsr {

namespace {

void check_weight(double w, const std::string& where) {
  if (!std::isfinite(w)) throw Error(Errc::InvalidWeight, where + ": weight is not finite");
  if (w <= 0.0) throw Error(Errc::InvalidWeight, where + ": weight must be positive");
}

}  // namespace

Graph::Graph(Matrix weights) : weights_(std::move(weights)) {
  if (weights_.rows() != weights_.cols()) {
    throw Error(Errc::DimensionMismatch, "weight matrix is not square");
  }
  if (weights_.rows() == 0) throw Error(Errc::InvalidArgument, "graph needs at least one vertex");
  for (Index j = 0; j < weights_.cols(); ++j) {
    for (Index i = 0; i < weights_.rows(); ++i) {
      const double w = weights_(i, j);
      if (!std::isfinite(w)) throw Error(Errc::InvalidWeight, "weight is not finite");
      if (w < 0.0) throw Error(Errc::InvalidWeight, "negative weight");
      if (i == j && w != 0.0) throw Error(Errc::SelfLoop, "nonzero diagonal weight");
      if (w != weights_(j, i)) throw Error(Errc::NotSymmetric, "weight matrix is not symmetric");
    }
  }
}

Graph Graph::from_edges(Index n_vertices, std::span<const Edge> edges) {
  if (n_vertices <= 0) throw Error(Errc::InvalidArgument, "vertex count must be positive");
  Matrix w = Matrix::Zero(n_vertices, n_vertices);
  for (const Edge& e : edges) {
    if (e.i < 0 || e.j < 0 || e.i >= n_vertices || e.j >= n_vertices) {
      throw Error(Errc::IndexOutOfRange, "edge (" + std::to_string(e.i) + ", " +
                                             std::to_string(e.j) + ") out of range");
    }
    if (e.i == e.j) throw Error(Errc::SelfLoop, "self loop at vertex " + std::to_string(e.i));
    check_weight(e.w, "edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    if (w(e.i, e.j) != 0.0) {
      throw Error(Errc::DuplicateEdge, "edge (" + std::to_string(e.i) + ", " +
                                           std::to_string(e.j) + ") listed twice");
    }
    w(e.i, e.j) = e.w;
    w(e.j, e.i) = e.w;
  }
  return Graph(std::move(w));
}

Index Graph::edge_count() const {
  Index count = 0;
  for (Index j = 0; j < size(); ++j)
    for (Index i = 0; i < j; ++i)
      if (weights_(i, j) != 0.0) ++count;
  return count;
}

Matrix laplacian(const Graph& g, LaplacianKind kind) {
  const Vector d = g.degrees();
  Matrix l = -g.weights();
  l.diagonal() += d;
  if (kind == LaplacianKind::Combinatorial) return l;

  Vector inv_sqrt(d.size());
  for (Index i = 0; i < d.size(); ++i) {
    if (!(d(i) > 0.0)) {
      throw Error(Errc::ZeroDegreeVertex,
                  "normalized Laplacian undefined: vertex " + std::to_string(i) + " has degree 0");
    }
    inv_sqrt(i) = 1.0 / std::sqrt(d(i));
  }
  Matrix out = inv_sqrt.asDiagonal() * l * inv_sqrt.asDiagonal();
  // Exact symmetry regardless of rounding in the two-sided product.
  return 0.5 * (out + out.transpose());
}

Graph circular_graph(Index n_vertices) {
  if (n_vertices < 3) throw Error(Errc::TooFewVertices, "circular graph needs at least 3 vertices");
  Matrix w = Matrix::Zero(n_vertices, n_vertices);
  for (Index k = 0; k < n_vertices; ++k) {
    const Index next = (k + 1) % n_vertices;
    w(k, next) = 1.0;
    w(next, k) = 1.0;
  }
  return Graph(std::move(w));
}

Graph erdos_renyi(Index n_vertices, double edge_probability, std::uint64_t seed) {
  if (n_vertices <= 0) throw Error(Errc::InvalidArgument, "vertex count must be positive");
  if (!(edge_probability > 0.0 && edge_probability < 1.0)) {
    throw Error(Errc::InvalidArgument, "edge probability must lie in (0, 1)");
  }
  Rng rng(seed);
  Matrix w = Matrix::Zero(n_vertices, n_vertices);
  for (Index i = 0; i < n_vertices; ++i) {
    for (Index j = i + 1; j < n_vertices; ++j) {
      if (rng.uniform01() < edge_probability) {
        w(i, j) = 1.0;
        w(j, i) = 1.0;
      }
    }
  }
  return Graph(std::move(w));
}

Graph read_edge_list(std::istream& in) {
  Index n = -1;
  std::map<std::pair<Index, Index>, double> pairs;
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    return Error(Errc::ParseError, "line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "N") {
      if (n >= 0) throw fail("duplicate N header");
      long long count = 0;
      if (!(ls >> count) || count <= 0) throw fail("N header needs a positive count");
      n = static_cast<Index>(count);
    } else {
      if (n < 0) throw fail("edge before N header");
      long long i = 0;
      long long j = 0;
      double w = 0.0;
      std::istringstream es(line);
      if (!(es >> i >> j >> w)) throw fail("expected '<i> <j> <w>'");
      std::string extra;
      if (es >> extra) throw fail("trailing tokens");
      if (i < 0 || j < 0 || i >= n || j >= n) {
        throw Error(Errc::IndexOutOfRange, "line " + std::to_string(line_no) + ": index out of range");
      }
      if (i == j) throw Error(Errc::SelfLoop, "line " + std::to_string(line_no) + ": self loop");
      check_weight(w, "line " + std::to_string(line_no));
      const std::pair<Index, Index> key{std::min<Index>(i, j), std::max<Index>(i, j)};
      if (const auto it = pairs.find(key); it != pairs.end()) {
        if (it->second != w) {
          throw Error(Errc::DuplicateEdge,
                      "line " + std::to_string(line_no) + ": pair repeated with a different weight");
        }
        continue;
      }
      pairs.emplace(key, w);
    }
  }
  if (n < 0) throw Error(Errc::ParseError, "missing N header");
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [key, w] : pairs) edges.push_back({key.first, key.second, w});
  return Graph::from_edges(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "N " << g.size() << '\n';
  out << std::setprecision(17);
  for (Index i = 0; i < g.size(); ++i)
    for (Index j = i + 1; j < g.size(); ++j)
      if (g.weights()(i, j) != 0.0) out << i << ' ' << j << ' ' << g.weights()(i, j) << '\n';
}

LaplacianKind parse_laplacian_kind(const std::string& name) {
  if (name == "combinatorial") return LaplacianKind::Combinatorial;
  if (name == "normalized") return LaplacianKind::Normalized;
  throw Error(Errc::ConfigError, "unknown Laplacian kind '" + name + "'");
}

}  // namespace gsr
