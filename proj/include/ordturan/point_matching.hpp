#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ordturan/interval_union.hpp"
#include "ordturan/ordered_graph.hpp"

namespace ordturan {

/// Matching edge between real points 0 < x < y < 2.
///
/// `depth` counts how many half-scalings the edge went through inside the
/// recursive host (0 for the top quasi-random layer); `block` is the index,
/// left to right, of the sub-block at that depth it lives in.
struct PointEdge {
  double x = 0.0;
  double y = 0.0;
  int depth = 0;
  std::uint32_t block = 0;

  friend bool operator==(const PointEdge&, const PointEdge&) = default;
};

/// Matching on real points of (0,2). All 2m endpoint coordinates are
/// pairwise distinct. Edges are sorted by left endpoint.
class PointMatching {
 public:
  PointMatching() = default;
  /// Throws std::invalid_argument if an edge leaves (0,2), has x >= y, or two
  /// endpoints coincide.
  explicit PointMatching(std::vector<PointEdge> edges);

  std::span<const PointEdge> edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const PointEdge& operator[](std::size_t i) const { return edges_[i]; }

  /// Every edge goes from (0,1) to (1,2).
  bool is_bipartite_across_one() const;

  /// Sub-matching with the listed edge indices.
  PointMatching subset(std::span<const std::size_t> indices) const;

  friend bool operator==(const PointMatching&, const PointMatching&) = default;

 private:
  std::vector<PointEdge> edges_;
};

/// Number of edges with left endpoint in `left` and right endpoint in `right`.
std::size_t count_edges_between(const PointMatching& g, const IntervalUnion& left,
                                const IntervalUnion& right);

/// Points covered by some edge (a,b) with a < x < b, as a union of open
/// intervals.
IntervalUnion covered_set(const PointMatching& h);

/// Sorted left endpoints L(H) and right endpoints R(H).
std::vector<double> endpoints_left(const PointMatching& h);
std::vector<double> endpoints_right(const PointMatching& h);

/// Closed hull [min, max] of a nonempty point set; throws on empty input.
Interval interval_hull(std::span<const double> points);

/// Ranks the 2m endpoints by coordinate and returns the matching on ranks.
/// When `source` is given, (*source)[i] is the index in g of the point edge
/// behind edge i of the result.
OrderedGraph to_ordered_graph(const PointMatching& g,
                              std::vector<std::size_t>* source = nullptr);

}  // namespace ordturan
