#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ordturan/ordered_graph.hpp"

namespace ordturan::catalog {

/// Monotone path 1-2-...-k. Requires k >= 2.
OrderedGraph build_P(int k);

/// P_{1+a+b} plus the chord {1, 1+a}. Requires a >= 2, b >= 1.
OrderedGraph build_Q(int a, int b);

/// Union of the paths 1,2,...,n and 1,a+1,2a+1,...,n. Requires a >= 2 and
/// n = a*l + 1 for some l >= 1.
OrderedGraph build_B(int a, int n);

/// Consecutive matching {12, 34, ..., (2j-1)(2j)}. Requires j >= 1.
OrderedGraph build_M(int j);

/// Exactly the given edges on {1..n}, n defaulting to the largest endpoint.
OrderedGraph build_pattern(std::span<const std::pair<int, int>> edges,
                           int n = -1);

inline constexpr int kMaxHd = 12;

/// Recursive host H_d: 2^(d-1) left vertices, two copies of H_(d-1), then
/// 2^(d-1) right vertices matched in nested fashion to the left ones.
/// |V(H_d)| = 2|V(H_(d-1))| + 2^d and e(H_d) = d 2^(d-1).
OrderedGraph build_H_d(int d);

/// Vertex count of H_d from the recursion.
int H_d_vertex_count(int d);

/// Vertices {1..t}, edges ij with i < j, i odd and j even.
OrderedGraph build_H_stair(int t);

/// M = {16, 23, 45}.
OrderedGraph matching_16_23_45();
/// M' = {13, 25, 46}.
OrderedGraph matching_13_25_46();

}  // namespace ordturan::catalog
