#include "ordturan/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ordturan::catalog {

OrderedGraph build_P(int k) {
  if (k < 2) throw std::invalid_argument("P_k requires k >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < k; ++i) edges.push_back({i, i + 1});
  return OrderedGraph(k, std::move(edges));
}

OrderedGraph build_Q(int a, int b) {
  if (a < 2 || b < 1) throw std::invalid_argument("Q_{a,b} requires a >= 2, b >= 1");
  const int n = 1 + a + b;
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, 1 + a});
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph build_B(int a, int n) {
  if (a < 2) throw std::invalid_argument("B_{a,n} requires a >= 2");
  if (n < a + 1 || (n - 1) % a != 0) {
    throw std::invalid_argument("B_{a,n} requires n = a*l + 1 with l >= 1");
  }
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i, i + 1});
  for (Vertex i = 1; i + a <= n; i += a) edges.push_back({i, i + a});
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph build_M(int j) {
  if (j < 1) throw std::invalid_argument("M_j requires j >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= j; ++i) edges.push_back({2 * i - 1, 2 * i});
  return OrderedGraph(2 * j, std::move(edges));
}

OrderedGraph build_pattern(std::span<const std::pair<int, int>> pairs, int n) {
  int largest = 0;
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 1 || v < 1 || u == v) {
      throw std::invalid_argument("malformed pattern edge (" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  ")");
    }
    largest = std::max({largest, u, v});
    edges.push_back({u, v});
  }
  if (n < 0) n = largest;
  return OrderedGraph(n, std::move(edges));
}

int H_d_vertex_count(int d) {
  if (d < 1) throw std::invalid_argument("H_d requires d >= 1");
  int count = 2;
  for (int i = 2; i <= d; ++i) count = 2 * count + (1 << i);
  return count;
}

namespace {

// Appends H_d at offset (positions offset+1 ..) and returns its width.
int append_H(int d, int offset, std::vector<Edge>& edges) {
  if (d == 1) {
    edges.push_back({offset + 1, offset + 2});
    return 2;
  }
  const int m = 1 << (d - 1);
  const int first = offset + m;
  const int w1 = append_H(d - 1, first, edges);
  const int w2 = append_H(d - 1, first + w1, edges);
  const int b_start = first + w1 + w2;  // b_i sits at b_start + i
  for (int i = 1; i <= m; ++i) {
    edges.push_back({offset + i, b_start + (m + 1 - i)});
  }
  return 2 * m + w1 + w2;
}

}  // namespace

OrderedGraph build_H_d(int d) {
  if (d < 1) throw std::invalid_argument("H_d requires d >= 1");
  if (d > kMaxHd) throw std::invalid_argument("H_d size guard: d <= 12");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(d) << (d - 1));
  const int n = append_H(d, 0, edges);
  return OrderedGraph(n, std::move(edges));
}

OrderedGraph build_H_stair(int t) {
  if (t < 2) throw std::invalid_argument("H_t requires t >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= t; i += 2) {
    for (Vertex j = i + 1; j <= t; j += 2) edges.push_back({i, j});
  }
  return OrderedGraph(t, std::move(edges));
}

OrderedGraph matching_16_23_45() {
  return OrderedGraph(6, {{1, 6}, {2, 3}, {4, 5}});
}

OrderedGraph matching_13_25_46() {
  return OrderedGraph(6, {{1, 3}, {2, 5}, {4, 6}});
}

}  // namespace ordturan::catalog
