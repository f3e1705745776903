#include "ordturan/claim.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>

#include "ordturan/catalog.hpp"
#include "ordturan/embedding.hpp"
#include "ordturan/solver.hpp"

namespace ordturan {

double f_d(int d, double t) {
  if (d < 1) throw std::invalid_argument("f_d requires d >= 1");
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("f_d requires t in [0,1]");
  const double knee = std::ldexp(1.0, -(d - 1));
  if (t <= knee) return std::ldexp(t * t, d - 1);
  return 2.0 * t - knee;
}

namespace {

IntervalUnion gap_hulls(const IntervalUnion& cover, double lo, double hi,
                        const std::vector<double>& points) {
  std::vector<Interval> hulls;
  const IntervalUnion gaps = cover.complement_within(lo, hi);
  for (const auto& gap : gaps.intervals()) {
    std::vector<double> inside;
    for (double p : points) {
      if (gap.contains(p)) inside.push_back(p);
    }
    if (!inside.empty()) hulls.push_back(interval_hull(inside));
  }
  return IntervalUnion(std::move(hulls));
}

}  // namespace

ClaimDecomposition decompose_for_claim(const PointMatching& h) {
  ClaimDecomposition out;
  std::vector<PointEdge> a, b, c;
  for (const auto& e : h.edges()) {
    if (e.y < 1.0) {
      a.push_back(e);
    } else if (e.x > 1.0) {
      b.push_back(e);
    } else {
      c.push_back(e);
    }
  }
  out.a_edges = a.size();
  out.b_edges = b.size();
  out.c_edges = c.size();
  const PointMatching crossing(c);
  out.left_cover = covered_set(PointMatching(std::move(a)));
  out.right_cover = covered_set(PointMatching(std::move(b)));
  out.left_hulls = gap_hulls(out.left_cover, 0.0, 1.0, endpoints_left(crossing));
  out.right_hulls = gap_hulls(out.right_cover, 1.0, 2.0, endpoints_right(crossing));
  out.covered_length = covered_set(h).total_length();

  for (const auto& e : crossing.edges()) {
    const bool in_i = out.left_cover.contains(e.x);
    const bool in_j = out.right_cover.contains(e.y);
    const bool in_ip = out.left_hulls.contains(e.x);
    const bool in_jp = out.right_hulls.contains(e.y);
    if (in_i && in_j) out.no_cover_to_cover = false;
    if (!((in_ip && (in_jp || in_j)) || (in_i && in_jp))) out.crossing_edges_placed = false;
  }
  const double parts = out.left_cover.total_length() + out.right_cover.total_length() +
                       out.left_hulls.total_length() + out.right_hulls.total_length();
  out.lengths_fit = parts <= out.covered_length + 1e-12;
  return out;
}

ClaimResult check_claim(const PointMatching& h, const PointMatching& g, int d,
                        std::size_t n, double eps) {
  std::set<std::pair<double, double>> host;
  for (const auto& e : g.edges()) host.emplace(e.x, e.y);
  for (const auto& e : h.edges()) {
    if (!host.contains({e.x, e.y})) {
      throw ClaimHypothesisViolated("check_claim: H is not a subgraph of the host");
    }
  }
  if (contains(to_ordered_graph(h), catalog::matching_13_25_46())) {
    throw ClaimHypothesisViolated("check_claim: H contains {13,25,46}");
  }

  ClaimResult r;
  r.parts = decompose_for_claim(h);
  r.edges = h.size();
  r.t = std::clamp(r.parts.covered_length / 2.0, 0.0, 1.0);
  const double layer = std::ldexp(static_cast<double>(n), d - 1);
  r.bound = f_d(d, r.t) * layer + std::pow(10.0, d) * eps * static_cast<double>(n);
  r.slack = r.bound - static_cast<double>(r.edges);
  r.holds = static_cast<double>(r.edges) <= r.bound;
  return r;
}

PointMatching greedy_free_subgraph(const PointMatching& g, std::uint64_t seed) {
  std::vector<std::size_t> source;
  const OrderedGraph ordered = to_ordered_graph(g, &source);
  const SolveReport report =
      max_free_greedy(ordered, catalog::matching_13_25_46(), OrderPolicy::Random, seed);
  std::vector<bool> removed(ordered.edge_count(), false);
  for (auto i : report.deleted_indices) removed[i] = true;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < ordered.edge_count(); ++i) {
    if (!removed[i]) kept.push_back(source[i]);
  }
  std::sort(kept.begin(), kept.end());
  return g.subset(kept);
}

}  // namespace ordturan
