#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ordturan/ordered_graph.hpp"

namespace ordturan {

/// Backtracking search for order-preserving, edge-preserving (non-induced)
/// copies of a fixed pattern inside a host adjacency structure.
///
/// Enumeration assigns pattern vertices in label order and tries host
/// candidates in increasing order, which yields embeddings in lexicographic
/// order of the image sequence. Existence queries are free to reorder: they
/// choose the most constrained pattern vertex next, skip isolated pattern
/// vertices (only the gap sizes matter for them) and forward-check that every
/// unplaced neighbour still has a host neighbour inside its feasible range.
class PatternMatcher {
 public:
  explicit PatternMatcher(const OrderedGraph& pattern);

  const OrderedGraph& pattern() const { return pattern_; }

  /// Calls `visit` with each embedding image (image[i] = phi(i+1)) in
  /// lexicographic order; stops early when `visit` returns false.
  void enumerate(const Adjacency& host,
                 const std::function<bool(std::span<const Vertex>)>& visit,
                 std::size_t* nodes = nullptr) const;

  bool exists(const Adjacency& host, std::size_t* nodes = nullptr) const;

  /// Some copy uses the host edge `through` as the image of a pattern edge.
  bool exists_through(const Adjacency& host, Edge through,
                      std::size_t* nodes = nullptr) const;

  /// First copy found by the existence search (not necessarily the
  /// lexicographically smallest one).
  std::optional<Embedding> find(const Adjacency& host,
                                std::size_t* nodes = nullptr) const;

 private:
  struct Search;

  OrderedGraph pattern_;
  std::vector<std::vector<Vertex>> neighbours_;  // all neighbours, sorted
  std::vector<int> fwd_degree_;
  std::vector<int> bwd_degree_;
};

/// All embeddings of `f` in `g` in lexicographic order of the image,
/// truncated to the first `limit` when given.
std::vector<Embedding> enumerate_embeddings(
    const OrderedGraph& g, const OrderedGraph& f,
    std::optional<std::size_t> limit = std::nullopt);

bool contains(const OrderedGraph& g, const OrderedGraph& f);

/// Host edge indices used by an embedding, sorted and deduplicated.
std::vector<std::size_t> edge_image(const OrderedGraph& g,
                                    const OrderedGraph& f,
                                    std::span<const Vertex> image);

}  // namespace ordturan
