#include <doctest.h>

#include "brute_force.hpp"
#include "helpers.hpp"
#include "ordturan/catalog.hpp"
#include "ordturan/embedding.hpp"

using namespace ordturan;
using namespace ordturan::catalog;
using ordturan::testing::edges_graph;

TEST_CASE("P_k") {
  CHECK(build_P(2) == edges_graph(2, {{1, 2}}));
  CHECK(build_P(5).edge_count() == 4);
  CHECK(chi_interval(build_P(5)) == 5);
  CHECK(ell_monotone(build_P(9)) == 9);
  CHECK_THROWS_AS(build_P(1), std::invalid_argument);
}

TEST_CASE("Q_{a,b}") {
  CHECK(build_Q(2, 2) == edges_graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 3}}));
  CHECK(build_Q(2, 1) == edges_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 3}}));
  for (int a = 2; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) CHECK(build_Q(a, b).edge_count() == static_cast<std::size_t>(a + b + 1));
  }
  for (int a = 2; a <= 5; ++a) {
    for (int b = 2; b <= a; ++b) CHECK(chi_interval(build_Q(a, b)) == a + b + 1);
  }
  CHECK_THROWS_AS(build_Q(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_Q(2, 0), std::invalid_argument);
}

TEST_CASE("B_{a,n}") {
  // path 1..9 plus 13, 35, 57, 79
  const auto b29 = build_B(2, 9);
  CHECK(b29 == edges_graph(9, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9},
                               {1, 3}, {3, 5}, {5, 7}, {7, 9}}));
  CHECK(b29.edge_count() == 12);
  const auto b37 = build_B(3, 7);
  CHECK(b37.edge_count() == 8);
  CHECK(b37.has_edge(1, 4));
  CHECK(b37.has_edge(4, 7));
  CHECK_THROWS_AS(build_B(2, 8), std::invalid_argument);
  CHECK_THROWS_AS(build_B(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_B(3, 1), std::invalid_argument);
  for (int a = 2; a <= 5; ++a) {
    for (int ell = 1; ell <= 5; ++ell) {
      const int n = a * ell + 1;
      const auto b = build_B(a, n);
      CHECK(ell_monotone(b) == n);
      CHECK(b.edge_count() == static_cast<std::size_t>((a + 1) * (n - 1) / a));
    }
  }
}

TEST_CASE("M_j") {
  CHECK(build_M(1) == build_P(2));
  CHECK(build_M(3) == edges_graph(6, {{1, 2}, {3, 4}, {5, 6}}));
  CHECK(chi_interval(build_M(3)) == 4);
  CHECK(build_M(4).edge_count() == 4);
  CHECK(ell_monotone(build_M(4)) == 2);
  CHECK_THROWS_AS(build_M(0), std::invalid_argument);
  for (int j = 1; j <= 6; ++j) {
    std::vector<std::pair<int, int>> list;
    for (int i = 1; i <= j; ++i) list.emplace_back(2 * i - 1, 2 * i);
    CHECK(build_M(j) == build_pattern(list));
  }
}

TEST_CASE("build_pattern") {
  const std::vector<std::pair<int, int>> m{{1, 6}, {2, 3}, {4, 5}};
  CHECK(build_pattern(m) == matching_16_23_45());
  CHECK(matching_16_23_45().n() == 6);
  const auto mp = matching_13_25_46();
  CHECK(mp.n() == 6);
  CHECK(mp.edge_count() == 3);
  CHECK(chi_interval(mp) == 3);
  CHECK(oracle::chi_interval(mp) == 3);
  CHECK(build_pattern({}).n() == 0);
  CHECK(build_pattern({}).edge_count() == 0);
  const std::vector<std::pair<int, int>> padded{{1, 2}};
  CHECK(build_pattern(padded, 4).n() == 4);
  const std::vector<std::pair<int, int>> bad{{2, 2}};
  CHECK_THROWS_AS(build_pattern(bad), std::invalid_argument);
  const std::vector<std::pair<int, int>> dup{{1, 2}, {2, 1}};
  CHECK_THROWS_AS(build_pattern(dup), std::invalid_argument);
}

TEST_CASE("H_d") {
  CHECK(build_H_d(1) == build_P(2));
  CHECK(H_d_vertex_count(3) == 24);
  const auto h3 = build_H_d(3);
  CHECK(h3 == edges_graph(24, {{1, 24}, {2, 23}, {3, 22}, {4, 21}, {5, 12}, {6, 11}, {7, 8},
                               {9, 10}, {13, 20}, {14, 19}, {15, 16}, {17, 18}}));
  for (int d = 1; d <= 8; ++d) {
    const auto h = build_H_d(d);
    CHECK(h.edge_count() == static_cast<std::size_t>(d) << (d - 1));
    CHECK(h.n() == H_d_vertex_count(d));
    if (d >= 2) CHECK(h.n() == 2 * H_d_vertex_count(d - 1) + (1 << d));
  }
  CHECK(build_H_d(12).edge_count() == 12u << 11);
  CHECK_THROWS_AS(build_H_d(13), std::invalid_argument);
  CHECK_THROWS_AS(build_H_d(0), std::invalid_argument);
}

TEST_CASE("H_d holds two disjoint copies of H_(d-1)") {
  for (int d = 2; d <= 4; ++d) {
    const auto h = build_H_d(d);
    const auto sub = build_H_d(d - 1);
    const int half = 1 << (d - 1);
    const int block = H_d_vertex_count(d - 1);
    // blocks sit between the 2^(d-1) left and right matching vertices
    for (int copy = 0; copy < 2; ++copy) {
      const int offset = half + copy * block;
      std::vector<Edge> inside;
      for (const auto& e : h.edges()) {
        if (e.u > offset && e.v <= offset + block) inside.push_back({e.u - offset, e.v - offset});
      }
      CHECK(OrderedGraph(block, inside) == sub);
    }
    CHECK(blowup(sub, 1) == sub);
    CHECK(enumerate_embeddings(h, sub).size() >= 2);
  }
}

TEST_CASE("H_stair") {
  CHECK(build_H_stair(2) == build_P(2));
  // {12} on three vertices: 2-3 joins an even vertex to an odd one
  CHECK(build_H_stair(3) == edges_graph(3, {{1, 2}}));
  CHECK(build_H_stair(4) == edges_graph(4, {{1, 2}, {1, 4}, {3, 4}}));
  for (int t = 2; t <= 10; ++t) CHECK(oracle::ell_monotone(build_H_stair(t)) == 2);
  CHECK_THROWS_AS(build_H_stair(1), std::invalid_argument);
}
