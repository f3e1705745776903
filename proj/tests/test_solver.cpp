#include <doctest.h>

#include "brute_force.hpp"
#include "helpers.hpp"
#include "ordturan/catalog.hpp"
#include "ordturan/embedding.hpp"
#include "ordturan/solver.hpp"

using namespace ordturan;
using ordturan::testing::edges_graph;
using ordturan::testing::random_graph;
using ordturan::testing::random_pattern;

namespace {

void check_sound(const OrderedGraph& g, const OrderedGraph& f, const SolveReport& r) {
  CHECK(r.host_edges == g.edge_count());
  CHECK(r.optimum + r.deleted_indices.size() == g.edge_count());
  CHECK(r.deleted.size() == r.deleted_indices.size());
  CHECK(std::is_sorted(r.deleted_indices.begin(), r.deleted_indices.end()));
  CHECK_FALSE(oracle::contains(g.without_edges(r.deleted_indices), f));
}

}  // namespace

TEST_CASE("min_deletion_exact on matchings") {
  for (int j = 2; j <= 3; ++j) {
    for (int k = j; k <= 8; ++k) {
      const auto r = min_deletion_exact(catalog::build_M(k), catalog::build_M(j));
      CHECK(r.status == SolveStatus::ProvedOptimal);
      CHECK(r.deleted.size() == static_cast<std::size_t>(k - j + 1));
      CHECK(r.optimum == static_cast<std::size_t>(j - 1));
      CHECK(r.deletion_lower_bound == r.deleted.size());
    }
  }
}

TEST_CASE("an F-free host needs no deletion") {
  const auto r = min_deletion_exact(catalog::build_M(4), catalog::build_P(3));
  CHECK(r.deleted.empty());
  CHECK(r.optimum == 4);
  CHECK(r.status == SolveStatus::ProvedOptimal);
  CHECK_THROWS_AS(min_deletion_exact(catalog::build_M(2), OrderedGraph(2, {})),
                  std::invalid_argument);
}

TEST_CASE("B_{2,9} against Q_{2,2}") {
  const auto g = catalog::build_B(2, 9);
  const auto f = catalog::build_Q(2, 2);
  const auto r = min_deletion_exact(g, f);
  check_sound(g, f, r);
  CHECK(r.deleted.size() >= 3);
  const auto o = oracle::min_deletion(g, f);
  CHECK(o.size == r.deleted.size());
  CHECK(o.lex_smallest == r.deleted_indices);
}

TEST_CASE("H_3 against {16,23,45}") {
  const auto g = catalog::build_H_d(3);
  const auto m = catalog::matching_16_23_45();
  const auto r = min_deletion_exact(g, m);
  check_sound(g, m, r);
  CHECK(r.optimum <= 8);
  CHECK(r.optimum == oracle::max_free(g, m));
}

TEST_CASE("lazy constraints reach the same optimum") {
  ExactOptions lazy;
  lazy.embedding_cap = 1;
  for (const auto& [g, f] : std::vector<std::pair<OrderedGraph, OrderedGraph>>{
           {catalog::build_B(2, 9), catalog::build_Q(2, 2)},
           {catalog::build_H_d(3), catalog::matching_16_23_45()},
           {catalog::build_M(7), catalog::build_M(3)}}) {
    const auto full = min_deletion_exact(g, f);
    const auto r = min_deletion_exact(g, f, lazy);
    CHECK(r.status == SolveStatus::ProvedOptimal);
    CHECK(r.deleted_indices == full.deleted_indices);
    check_sound(g, f, r);
  }
}

TEST_CASE("budget exhaustion keeps a feasible incumbent") {
  ExactOptions tiny;
  tiny.node_budget = 3;
  const auto g = catalog::build_H_d(4);
  const auto m = catalog::matching_16_23_45();
  const auto r = min_deletion_exact(g, m, tiny);
  CHECK(r.status == SolveStatus::BudgetExhausted);
  check_sound(g, m, r);
  CHECK(r.deletion_lower_bound <= r.deleted.size());
}

TEST_CASE("max_free_greedy") {
  const auto r = max_free_greedy(catalog::build_M(5), catalog::build_M(3));
  CHECK(r.optimum == 2);
  CHECK(r.status == SolveStatus::Heuristic);
  CHECK(parse_order_policy("low-degree") == OrderPolicy::LowDegreeFirst);
  CHECK(to_string(OrderPolicy::Random) == "random");
  CHECK_THROWS_AS(parse_order_policy("best"), std::invalid_argument);

  Rng rng(51);
  for (int trial = 0; trial < 80; ++trial) {
    const auto g = random_graph(rng, 2 + static_cast<int>(rng.below(7)), 0.5, 14);
    const auto f = random_pattern(rng, 2 + static_cast<int>(rng.below(3)), 3);
    const auto exact = min_deletion_exact(g, f);
    for (auto policy : {OrderPolicy::Given, OrderPolicy::Random, OrderPolicy::LowDegreeFirst}) {
      const auto greedy = max_free_greedy(g, f, policy, static_cast<std::uint64_t>(trial));
      check_sound(g, f, greedy);
      CHECK(greedy.optimum <= exact.optimum);
      // maximal: every deleted edge would complete a copy
      auto kept = g.without_edges(greedy.deleted_indices);
      for (const auto& e : greedy.deleted) {
        std::vector<Edge> plus(kept.edges());
        plus.push_back(e);
        CHECK(contains(OrderedGraph(g.n(), plus), f));
      }
    }
  }
}

TEST_CASE("bipartite_half") {
  const auto triangle = edges_graph(3, {{1, 2}, {2, 3}, {1, 3}});
  const auto t = bipartite_half(triangle);
  CHECK(t.optimum == 2);
  Rng rng(52);
  const auto q = catalog::build_Q(2, 2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_graph(rng, 3 + static_cast<int>(rng.below(10)), rng.open01());
    const auto r = bipartite_half(g, static_cast<std::uint64_t>(trial));
    const auto kept = g.without_edges(r.deleted_indices);
    CHECK(2 * r.optimum >= g.edge_count());
    CHECK_FALSE(has_odd_cycle(kept));
    CHECK_FALSE(oracle::contains(kept, q));
  }
}

TEST_CASE("exact solver equals exhaustive search on random instances") {
  Rng rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(8));
    const auto g = random_graph(rng, n, 0.3 + 0.7 * rng.open01(), 14);
    const auto f = random_pattern(rng, 2 + static_cast<int>(rng.below(4)), 3);
    INFO("trial " << trial);
    const auto r = min_deletion_exact(g, f);
    REQUIRE(r.status == SolveStatus::ProvedOptimal);
    check_sound(g, f, r);
    const auto o = oracle::min_deletion(g, f);
    CHECK(o.size == r.deleted.size());
    CHECK(o.lex_smallest == r.deleted_indices);
    CHECK(oracle::max_free(g, f) == r.optimum);
  }
}

TEST_CASE("a deletion set works iff it meets every copy") {
  Rng rng(54);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(rng, 6, 0.6, 10);
    const auto f = random_pattern(rng, 3, 2);
    const auto copies = enumerate_embeddings(g, f);
    std::vector<std::vector<std::size_t>> images;
    for (const auto& c : copies) images.push_back(edge_image(g, f, c.map));
    for (std::uint32_t mask = 0; mask < (1U << g.edge_count()); mask += 7) {
      std::vector<std::size_t> del;
      for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if ((mask >> i) & 1U) del.push_back(i);
      }
      bool hits = true;
      for (const auto& img : images) {
        hits = hits && std::any_of(img.begin(), img.end(), [&](auto e) {
          return std::binary_search(del.begin(), del.end(), e);
        });
      }
      CHECK(hits == !contains(g.without_edges(del), f));
    }
  }
}

TEST_CASE("adding edges never lowers the minimum deletion") {
  Rng rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(rng, 7, 0.5, 12);
    const auto f = random_pattern(rng, 3, 2);
    std::vector<Edge> more(g.edges());
    for (int u = 1; u <= 7 && more.size() < g.edges().size() + 2; ++u) {
      for (int v = u + 1; v <= 7; ++v) {
        if (!g.has_edge(u, v)) {
          more.push_back({u, v});
          break;
        }
      }
    }
    const OrderedGraph bigger(7, more);
    CHECK(min_deletion_exact(bigger, f).deleted.size() >= min_deletion_exact(g, f).deleted.size());
  }
}

TEST_CASE("deletion lower bound for B_{a,n} against Q_{a,b}") {
  for (int a = 2; a <= 3; ++a) {
    for (int b = 1; b <= a; ++b) {
      for (int ell = 1; ell <= 4; ++ell) {
        const auto g = catalog::build_B(a, a * ell + 1);
        const auto r = min_deletion_exact(g, catalog::build_Q(a, b));
        CHECK(r.status == SolveStatus::ProvedOptimal);
        CHECK(r.deleted.size() + 1 >= static_cast<std::size_t>(ell));
      }
    }
  }
}

TEST_CASE("rho_upper_from_witness") {
  const std::vector<int> ells{2, 3, 4};
  const auto b = rho_upper_from_witness([](int l) { return catalog::build_B(2, 2 * l + 1); },
                                        catalog::build_Q(2, 2), ells);
  REQUIRE(b.size() == 3);
  for (const auto& w : b) {
    CHECK(w.certified);
    CHECK(w.ratio <= Rational(2, 3) + Rational(1, 3 * w.index));
  }
  CHECK(b.back().ratio <= Rational(3, 4));

  const std::vector<int> ks{2, 3, 4, 5, 6};
  const auto m = rho_upper_from_witness([](int k) { return catalog::build_M(k); },
                                        catalog::build_M(2), ks);
  for (const auto& w : m) CHECK(w.ratio == Rational(1, w.index));
  CHECK(m.back().running_min == Rational(1, 6));

  const std::vector<int> ds{1, 2, 3};
  const auto h = rho_upper_from_witness([](int d) { return catalog::build_H_d(d); },
                                        catalog::matching_16_23_45(), ds);
  for (const auto& w : h) CHECK(w.ratio <= Rational(2, w.index));

  ExactOptions tiny;
  tiny.node_budget = 2;
  const std::vector<int> four{4};
  const auto cut = rho_upper_from_witness([](int d) { return catalog::build_H_d(d); },
                                          catalog::matching_16_23_45(), four, tiny);
  CHECK_FALSE(cut[0].certified);
  CHECK(cut[0].status == SolveStatus::BudgetExhausted);
  CHECK(cut[0].max_free_upper <= cut[0].host_edges);
}
