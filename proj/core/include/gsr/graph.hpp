#pragma once

#include "gsr/linalg.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

namespace gsr {

struct Edge {
  Index i;
  Index j;
  double w;
};

enum class LaplacianKind { Combinatorial, Normalized };

/// Undirected weighted graph stored as a dense symmetric weight matrix with
/// zero diagonal and nonnegative finite entries. Immutable once built.
class Graph {
 public:
  /// Validates and adopts a weight matrix.
  explicit Graph(Matrix weights);

  /// Builds from an edge list. Rejects out-of-range indices, self loops,
  /// repeated unordered pairs and non-positive or non-finite weights.
  static Graph from_edges(Index n_vertices, std::span<const Edge> edges);

  Index size() const noexcept { return weights_.rows(); }
  const Matrix& weights() const noexcept { return weights_; }
  Vector degrees() const { return weights_.rowwise().sum(); }
  Index edge_count() const;

 private:
  Matrix weights_;
};

/// D - W, or D^{-1/2} (D - W) D^{-1/2} for LaplacianKind::Normalized.
Matrix laplacian(const Graph& g, LaplacianKind kind = LaplacianKind::Combinatorial);

/// Unweighted ring on n >= 3 vertices: vertex k is adjacent to k +- 1 mod n.
Graph circular_graph(Index n_vertices);

/// G(n, p): each unordered pair carries weight 1 with probability p.
Graph erdos_renyi(Index n_vertices, double edge_probability, std::uint64_t seed);

/// Edge-list text format:
///
///   # comment
///   N 4
///   0 1 1.0
///   1 2 0.5
///
/// Indices are 0-based. The `N <count>` header must precede the first edge.
/// A pair listed twice (in either orientation) is accepted only when both
/// weights agree; otherwise DuplicateEdge is thrown.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

LaplacianKind parse_laplacian_kind(const std::string& name);

}  // namespace gsr
