#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "brute_force.hpp"
#include "ordturan/catalog.hpp"
#include "ordturan/claim.hpp"
#include "ordturan/embedding.hpp"
#include "ordturan/interval_union.hpp"
#include "ordturan/point_matching.hpp"
#include "ordturan/quasirandom.hpp"
#include "ordturan/random.hpp"

using namespace ordturan;

namespace {

PointMatching pm(std::vector<std::pair<double, double>> list) {
  std::vector<PointEdge> edges;
  for (auto [x, y] : list) edges.push_back({x, y, 0, 0});
  return PointMatching(std::move(edges));
}

IntervalUnion random_union(Rng& rng, double lo, double hi, int parts) {
  std::vector<double> cuts(2 * parts);
  for (auto& c : cuts) c = lo + (hi - lo) * rng.open01();
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> pieces;
  for (int i = 0; i < parts; ++i) pieces.push_back(Interval::open(cuts[2 * i], cuts[2 * i + 1]));
  return IntervalUnion(std::move(pieces));
}

const IntervalUnion kLeft = IntervalUnion::of({Interval::open(0, 1)});
const IntervalUnion kRight = IntervalUnion::of({Interval::open(1, 2)});

// One shared G_3(200, 0.2) host.
const PointMatching& g3() {
  static const PointMatching g = build_G_d(3, 200, 0.2, 5);
  return g;
}

}  // namespace

TEST_CASE("interval union normalisation") {
  const auto u = IntervalUnion::of({Interval::open(0.5, 0.9), Interval::open(0.1, 0.3),
                                    Interval::open(0.2, 0.4)});
  REQUIRE(u.count() == 2);
  CHECK(u.intervals()[0].lo == 0.1);
  CHECK(u.intervals()[0].hi == 0.4);
  CHECK(u.total_length() == doctest::Approx(0.7));
  // (0.1,0.3) and (0.3,0.5) touch at an uncovered point
  CHECK(IntervalUnion::of({Interval::open(0.1, 0.3), Interval::open(0.3, 0.5)}).count() == 2);
  CHECK(IntervalUnion::of({Interval::open(0.1, 0.3), Interval::closed(0.3, 0.5)}).count() == 1);
  CHECK(IntervalUnion::of({Interval::open(0.2, 0.2)}).empty());
  CHECK(IntervalUnion::of({Interval::closed(0.2, 0.2)}).count() == 1);
  CHECK_FALSE(u.contains(0.1));
  CHECK(u.contains(0.35));
  CHECK_FALSE(u.contains(0.45));
}

TEST_CASE("complement and intersection") {
  const auto u = IntervalUnion::of({Interval::open(0.2, 0.4), Interval::closed(0.6, 0.7)});
  const auto c = u.complement_within(0, 1);
  REQUIRE(c.count() == 3);
  CHECK(c.contains(0.2));
  CHECK(c.contains(0.4));
  CHECK_FALSE(c.contains(0.6));
  CHECK_FALSE(c.contains(0.0));
  CHECK(c.total_length() + u.total_length() == doctest::Approx(1.0));
  const auto w = u.intersect(Interval::open(0.3, 0.65));
  CHECK(w.total_length() == doctest::Approx(0.15));
  CHECK(w.contains(0.6));
}

TEST_CASE("point matching validation") {
  CHECK_THROWS_AS(pm({{0.5, 0.4}}), std::invalid_argument);
  CHECK_THROWS_AS(pm({{0.0, 1.4}}), std::invalid_argument);
  CHECK_THROWS_AS(pm({{0.5, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(pm({{0.1, 0.5}, {0.5, 0.9}}), std::invalid_argument);
  const auto g = pm({{0.4, 1.2}, {0.1, 1.5}});
  CHECK(g[0].x == 0.1);
  CHECK(g.is_bipartite_across_one());
  CHECK_FALSE(pm({{0.1, 0.3}}).is_bipartite_across_one());
}

TEST_CASE("count_edges_between") {
  const auto g = pm({{0.1, 1.5}, {0.4, 1.2}, {0.6, 1.9}});
  CHECK(count_edges_between(g, IntervalUnion{}, kRight) == 0);
  CHECK(count_edges_between(g, kLeft, IntervalUnion{}) == 0);
  CHECK(count_edges_between(g, kLeft, kRight) == 3);
  const auto i = IntervalUnion::of({Interval::open(0, 0.5)});
  const auto j = IntervalUnion::of({Interval::open(1.3, 2)});
  CHECK(count_edges_between(g, i, j) == 1);
}

TEST_CASE("covered sets, endpoints and hulls") {
  const auto one = covered_set(pm({{0.2, 1.7}}));
  REQUIRE(one.count() == 1);
  CHECK(one.total_length() == doctest::Approx(1.5));
  CHECK(covered_set(PointMatching{}).empty());
  const auto two = covered_set(pm({{0.1, 0.3}, {0.5, 0.9}}));
  CHECK(two.count() == 2);
  CHECK(two.total_length() == doctest::Approx(0.6));
  CHECK_FALSE(two.contains(0.1));

  const auto h = pm({{0.1, 1.5}, {0.4, 1.2}});
  CHECK(endpoints_left(h) == std::vector<double>{0.1, 0.4});
  CHECK(endpoints_right(h) == std::vector<double>{1.2, 1.5});
  const std::vector<double> single{0.3};
  CHECK(interval_hull(single) == Interval::closed(0.3, 0.3));
  CHECK(interval_hull(single).length() == 0.0);
  const std::vector<double> three{0.2, 0.5, 0.4};
  CHECK(interval_hull(three) == Interval::closed(0.2, 0.5));
  CHECK_THROWS_AS(interval_hull(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("to_ordered_graph") {
  CHECK(to_ordered_graph(pm({{0.3, 1.2}})) == OrderedGraph(2, {{1, 2}}));
  CHECK(to_ordered_graph(pm({{0.1, 1.9}, {0.5, 0.7}})) == OrderedGraph(4, {{1, 4}, {2, 3}}));
  std::vector<std::size_t> source;
  const auto g = pm({{0.5, 0.7}, {0.1, 1.9}, {0.6, 1.1}});
  const auto o = to_ordered_graph(g, &source);
  // ranks: 0.1 0.5 0.6 0.7 1.1 1.9 -> edges 16, 24, 35
  CHECK(o == OrderedGraph(6, {{1, 6}, {2, 4}, {3, 5}}));
  CHECK(source == std::vector<std::size_t>{0, 1, 2});
  CHECK(to_ordered_graph(g3()).edge_count() == g3().size());
}

TEST_CASE("to_ordered_graph preserves containment of M'") {
  Rng rng(41);
  const auto mp = catalog::matching_13_25_46();
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(7));
    std::vector<PointEdge> edges;
    for (int i = 0; i < m; ++i) {
      double x = 2 * rng.open01(), y = 2 * rng.open01();
      if (x > y) std::swap(x, y);
      edges.push_back({x, y, 0, 0});
    }
    const PointMatching g(edges);
    const bool geometric = oracle::contains_13_25_46(g);
    positives += geometric;
    CHECK(contains(to_ordered_graph(g), mp) == geometric);
  }
  CHECK(positives > 10);
}

TEST_CASE("f_d") {
  CHECK(f_d(1, 0.5) == doctest::Approx(0.25));
  CHECK(f_d(1, 1.0) == doctest::Approx(1.0));
  CHECK(f_d(3, 1.0) == doctest::Approx(1.75));
  for (int d = 1; d <= 6; ++d) {
    const double knee = std::ldexp(1.0, -(d - 1));
    CHECK(f_d(d, knee) == doctest::Approx(std::ldexp(knee * knee, d - 1)));
    CHECK(f_d(d, knee) == doctest::Approx(2 * knee - knee));
    double prev = -1.0;
    for (int i = 0; i <= 1000; ++i) {
      const double t = i / 1000.0;
      const double v = f_d(d, t);
      CHECK(v <= 2 * t + 1e-15);
      CHECK(v >= prev);
      prev = v;
      if (i >= 1 && i < 1000) {
        const double mid = 0.5 * (f_d(d, (i - 1) / 1000.0) + f_d(d, (i + 1) / 1000.0));
        CHECK(v <= mid + 1e-12);
      }
    }
  }
  CHECK_THROWS_AS(f_d(2, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(f_d(2, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(f_d(0, 0.5), std::invalid_argument);
}

TEST_CASE("certify_quasirandom examples") {
  // full interval pair: deviation 0 and e = n
  const auto g = gen_quasirandom(2000, 0.2, 3);
  CHECK(count_edges_between(g, kLeft, kRight) == 2000);
  const auto c = certify_quasirandom(g, 0.2);
  CHECK(c.passed);
  CHECK(c.grid == 250);
  CHECK(c.tolerance == doctest::Approx(40.0));

  // left endpoints clustered in (0, 0.01)
  Rng rng(3);
  std::vector<PointEdge> clustered;
  for (int i = 0; i < 1000; ++i) clustered.push_back({0.01 * rng.open01(), 1 + rng.open01(), 0, 0});
  const auto bad = certify_quasirandom(PointMatching(clustered), 0.1);
  CHECK_FALSE(bad.passed);
  CHECK(bad.max_deviation > 500);

  // the diagonal matching x_i = (i - 1/2)/n, y_i = 1 + x_i is far from
  // quasi-random: no edge joins (0, 1/2) to (3/2, 2)
  std::vector<PointEdge> diagonal;
  for (int i = 1; i <= 1000; ++i) {
    const double x = (i - 0.5) / 1000.0;
    diagonal.push_back({x, 1 + x, 0, 0});
  }
  const auto diag = certify_quasirandom(PointMatching(diagonal), 0.5);
  CHECK_FALSE(diag.passed);
  CHECK(diag.max_deviation == doctest::Approx(250.0).epsilon(0.01));

  CHECK_THROWS_AS(certify_quasirandom(pm({{0.1, 0.3}}), 0.2), std::invalid_argument);
  CHECK_THROWS_AS(certify_quasirandom(g, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(certify_quasirandom(g, 1.0), std::invalid_argument);
}

TEST_CASE("the grid certificate matches direct counting") {
  // brute force over all run pairs on a coarse grid
  Rng rng(44);
  std::vector<PointEdge> edges;
  for (int i = 0; i < 300; ++i) edges.push_back({rng.open01(), 1 + rng.open01(), 0, 0});
  const PointMatching g(edges);
  const auto c = certify_quasirandom(g, 0.9);
  const int t = c.grid;
  REQUIRE(t == 56);
  double worst = 0.0;
  for (int i1 = 0; i1 < t; ++i1) {
    for (int i2 = i1 + 1; i2 <= t; ++i2) {
      const auto i = IntervalUnion::of({Interval{double(i1) / t, double(i2) / t, true, false}});
      for (int j1 = 0; j1 < t; j1 += 5) {
        for (int j2 = j1 + 1; j2 <= t; j2 += 3) {
          const auto j =
              IntervalUnion::of({Interval{1 + double(j1) / t, 1 + double(j2) / t, true, false}});
          const double dev = std::abs(double(count_edges_between(g, i, j)) -
                                      double(i2 - i1) * (j2 - j1) / (t * t) * 300.0);
          worst = std::max(worst, dev);
        }
      }
    }
  }
  CHECK(worst <= c.max_deviation + 1e-9);
}

TEST_CASE("gen_quasirandom") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const auto draw = generate_quasirandom(400, 0.2, seed);
    CHECK(draw.graph.size() == 400);
    CHECK(draw.graph.is_bipartite_across_one());
    CHECK(draw.certificate.passed);
    CHECK(certify_quasirandom(draw.graph, 0.2).passed);
    CHECK(draw.sampler == Sampler::Lattice);
  }
  CHECK(gen_quasirandom(400, 0.2, 9) == gen_quasirandom(400, 0.2, 9));
  CHECK_FALSE(gen_quasirandom(400, 0.2, 9) == gen_quasirandom(400, 0.2, 10));

  const auto big = generate_quasirandom(50000, 0.2, 1);
  CHECK(big.sampler == Sampler::Uniform);
  CHECK(count_edges_between(big.graph, kLeft, kRight) == 50000);

  QuasirandomOptions strict;
  strict.resample_budget = 2;
  strict.sampler = Sampler::Uniform;
  CHECK_THROWS_AS(generate_quasirandom(50, 0.05, 1, strict), ResampleBudgetExhausted);
  CHECK(parse_sampler("lattice") == Sampler::Lattice);
  CHECK_THROWS_AS(parse_sampler("grid"), std::invalid_argument);
}

TEST_CASE("certified instances satisfy the union bound") {
  const auto g = gen_quasirandom(20000, 0.2, 4);
  Rng rng(45);
  for (int p = 0; p < 200; ++p) {
    const int a = 1 + static_cast<int>(rng.below(4));
    const int b = 1 + static_cast<int>(rng.below(4));
    const auto i = random_union(rng, 0, 1, a);
    const auto j = random_union(rng, 1, 2, b);
    const double dev = std::abs(double(count_edges_between(g, i, j)) -
                                i.total_length() * j.total_length() * 20000.0);
    CHECK(dev <= a * b * 0.2 * 20000.0);
    // additivity over a split of the left union
    const auto& first = i.intervals()[0];
    const auto rest = i.intersect(Interval{first.hi, 1.0, true, false});
    const auto head = IntervalUnion::of({first});
    CHECK(count_edges_between(g, i, j) ==
          count_edges_between(g, head, j) + count_edges_between(g, rest, j));
  }
}

TEST_CASE("build_G_d") {
  for (int d = 1; d <= 5; ++d) {
    const auto g = build_G_d(d, 100, 0.5, 2);
    CHECK(g.size() == static_cast<std::size_t>(d) * (std::size_t{1} << (d - 1)) * 100);
    std::vector<double> pts;
    for (const auto& e : g.edges()) {
      CHECK(e.x > 0.0);
      CHECK(e.y < 2.0);
      pts.push_back(e.x);
      pts.push_back(e.y);
    }
    std::sort(pts.begin(), pts.end());
    CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
  }
  CHECK(build_G_d(1, 200, 0.2, 8) == gen_quasirandom(200, 0.2, 8));
  CHECK(build_G_d(3, 200, 0.2, 5) == g3());
  // the top layer of G_3 has depth 0, the half copies carry their depth
  std::size_t top = 0;
  for (const auto& e : g3().edges()) top += e.depth == 0;
  CHECK(top == 800);
  CHECK_THROWS_AS(build_G_d(0, 10, 0.2, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_G_d(9, 10, 0.2, 1), std::invalid_argument);
}

TEST_CASE("covered sets of subgraphs of G_3 have at most 7 intervals") {
  const auto& g = g3();
  Rng rng(46);
  std::vector<std::size_t> order(g.size());
  for (int trial = 0; trial < 300; ++trial) {
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    rng.shuffle(std::span<std::size_t>(order));
    const auto size = 1 + rng.below(trial % 2 ? 12 : g.size());
    std::vector<std::size_t> pick(order.begin(), order.begin() + static_cast<long>(size));
    std::sort(pick.begin(), pick.end());
    CHECK(covered_set(g.subset(pick)).count() <= 7);
  }
}

TEST_CASE("check_claim") {
  const auto& g = g3();
  const auto empty = check_claim(PointMatching{}, g, 3, 200, 0.2);
  CHECK(empty.holds);
  CHECK(empty.t == 0.0);
  CHECK(empty.bound == doctest::Approx(1000 * 0.2 * 200));

  std::size_t top = 0;
  while (g[top].depth != 0) ++top;
  const std::vector<std::size_t> one{top};
  const auto single = check_claim(g.subset(one), g, 3, 200, 0.2);
  CHECK(single.holds);
  CHECK(single.t == doctest::Approx((g[top].y - g[top].x) / 2));
  CHECK(single.parts.c_edges == 1);

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto h = greedy_free_subgraph(g, seed);
    CHECK_FALSE(contains(to_ordered_graph(h), catalog::matching_13_25_46()));
    const auto r = check_claim(h, g, 3, 200, 0.2);
    CHECK(r.holds);
    CHECK(r.slack > 0);
    CHECK(r.parts.no_cover_to_cover);
    CHECK(r.parts.crossing_edges_placed);
    CHECK(r.parts.lengths_fit);
    CHECK(r.parts.a_edges + r.parts.b_edges + r.parts.c_edges == h.size());
  }

  CHECK_THROWS_AS(check_claim(pm({{0.1, 1.5}}), g, 3, 200, 0.2), ClaimHypothesisViolated);
  // a copy of M' inside G_3 itself
  const OrderedGraph ordered = to_ordered_graph(g);
  const auto copy = enumerate_embeddings(ordered, catalog::matching_13_25_46(), 1);
  REQUIRE(copy.size() == 1);
  std::vector<std::size_t> source;
  to_ordered_graph(g, &source);
  std::vector<std::size_t> picks;
  for (auto i : edge_image(ordered, catalog::matching_13_25_46(), copy[0].map)) {
    picks.push_back(source[i]);
  }
  std::sort(picks.begin(), picks.end());
  CHECK_THROWS_AS(check_claim(g.subset(picks), g, 3, 200, 0.2), ClaimHypothesisViolated);
}
