#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "ordturan/ordered_graph.hpp"
#include "ordturan/random.hpp"

namespace ordturan::testing {

/// Random graph on n vertices with up to max_edges edges (each candidate
/// pair kept with probability ~p).
inline OrderedGraph random_graph(Rng& rng, int n, double p, std::size_t max_edges = 64) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (rng.open01() < p) edges.push_back({u, v});
    }
  }
  rng.shuffle(std::span<Edge>(edges));
  if (edges.size() > max_edges) edges.resize(max_edges);
  return OrderedGraph(n, std::move(edges));
}

/// Random pattern with at least one edge.
inline OrderedGraph random_pattern(Rng& rng, int k, std::size_t max_edges) {
  for (;;) {
    auto f = random_graph(rng, k, 0.5, max_edges);
    if (f.edge_count() > 0) return f;
  }
}

inline OrderedGraph edges_graph(int n, std::vector<std::pair<int, int>> list) {
  std::vector<Edge> edges;
  for (auto [u, v] : list) edges.push_back({u, v});
  return OrderedGraph(n, std::move(edges));
}

}  // namespace ordturan::testing
