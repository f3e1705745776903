#include "ordturan/point_matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordturan {

PointMatching::PointMatching(std::vector<PointEdge> edges) : edges_(std::move(edges)) {
  std::vector<double> points;
  points.reserve(2 * edges_.size());
  for (const auto& e : edges_) {
    if (!(0.0 < e.x && e.x < e.y && e.y < 2.0)) {
      throw std::invalid_argument("point edge must satisfy 0 < x < y < 2");
    }
    points.push_back(e.x);
    points.push_back(e.y);
  }
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::invalid_argument("point matching endpoints must be distinct");
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const PointEdge& a, const PointEdge& b) { return a.x < b.x; });
}

bool PointMatching::is_bipartite_across_one() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const PointEdge& e) { return e.x < 1.0 && e.y > 1.0; });
}

PointMatching PointMatching::subset(std::span<const std::size_t> indices) const {
  std::vector<PointEdge> out;
  out.reserve(indices.size());
  for (auto i : indices) out.push_back(edges_.at(i));
  return PointMatching(std::move(out));
}

std::size_t count_edges_between(const PointMatching& g, const IntervalUnion& left,
                                const IntervalUnion& right) {
  if (left.empty() || right.empty()) return 0;
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (left.contains(e.x) && right.contains(e.y)) ++count;
  }
  return count;
}

IntervalUnion covered_set(const PointMatching& h) {
  std::vector<Interval> pieces;
  pieces.reserve(h.size());
  for (const auto& e : h.edges()) pieces.push_back(Interval::open(e.x, e.y));
  return IntervalUnion(std::move(pieces));
}

std::vector<double> endpoints_left(const PointMatching& h) {
  std::vector<double> out;
  out.reserve(h.size());
  for (const auto& e : h.edges()) out.push_back(e.x);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> endpoints_right(const PointMatching& h) {
  std::vector<double> out;
  out.reserve(h.size());
  for (const auto& e : h.edges()) out.push_back(e.y);
  std::sort(out.begin(), out.end());
  return out;
}

Interval interval_hull(std::span<const double> points) {
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  auto [lo, hi] = std::minmax_element(points.begin(), points.end());
  return Interval::closed(*lo, *hi);
}

OrderedGraph to_ordered_graph(const PointMatching& g, std::vector<std::size_t>* source) {
  struct Endpoint {
    double coord;
    std::size_t edge;
  };
  std::vector<Endpoint> points;
  points.reserve(2 * g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    points.push_back({g[i].x, i});
    points.push_back({g[i].y, i});
  }
  std::sort(points.begin(), points.end(),
            [](const Endpoint& a, const Endpoint& b) { return a.coord < b.coord; });
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].coord == points[i - 1].coord) {
      throw std::invalid_argument("coordinate collision in point matching");
    }
  }
  std::vector<Vertex> first(g.size(), 0);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto rank = static_cast<Vertex>(r + 1);
    auto& slot = first[points[r].edge];
    if (slot == 0) {
      slot = rank;
    } else {
      edges.push_back({slot, rank});
    }
  }
  OrderedGraph out(static_cast<int>(points.size()), std::move(edges));
  if (source != nullptr) {
    // left endpoints are distinct, so an ordered edge is keyed by its left rank
    std::vector<std::size_t> edge_at_left(points.size() + 1, 0);
    for (std::size_t r = 0; r < points.size(); ++r) {
      if (first[points[r].edge] == static_cast<Vertex>(r + 1)) {
        edge_at_left[r + 1] = points[r].edge;
      }
    }
    source->clear();
    for (const auto& e : out.edges()) source->push_back(edge_at_left[e.u]);
  }
  return out;
}

}  // namespace ordturan
