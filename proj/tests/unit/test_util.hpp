#pragma once

#include "gsr/graph.hpp"
#include "gsr/rng.hpp"

#include <cstdint>
#include <vector>

namespace gsr::test {

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

/// Ring plus random extra edges with weights in [0.5, 1.5): always connected.
inline Graph random_graph(Index n, std::uint64_t seed, double extra_p = 0.2) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Index i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 0.5 + rng.uniform01()});
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (rng.uniform01() < extra_p) edges.push_back({i, j, 0.5 + rng.uniform01()});
    }
  }
  return Graph::from_edges(n, edges);
}

inline Vector random_vector(Index n, std::uint64_t seed) {
  Rng rng(seed);
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = rng.normal();
  return v;
}

}  // namespace gsr::test
