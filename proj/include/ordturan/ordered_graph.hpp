#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ordturan {

/// Vertices are labelled 1..n; the label order is the vertex order.
using Vertex = int;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Mutable adjacency over the vertex set {1..n}. Neighbour lists are kept
/// sorted, split into forward (larger label) and backward (smaller label).
class Adjacency {
 public:
  Adjacency() = default;
  explicit Adjacency(int n);

  int vertex_count() const { return n_; }

  /// Returns false when the edge was already present.
  bool add(Edge e);
  /// Returns false when the edge was absent.
  bool remove(Edge e);
  bool has(Vertex u, Vertex v) const;

  std::span<const Vertex> forward(Vertex u) const { return fwd_[u]; }
  std::span<const Vertex> backward(Vertex v) const { return bwd_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(fwd_[v].size() + bwd_[v].size());
  }

  /// Sorted list of vertices with at least one incident edge.
  std::span<const Vertex> active() const { return active_; }

 private:
  void touch(Vertex v);
  void release(Vertex v);

  int n_ = 0;
  std::vector<std::vector<Vertex>> fwd_;
  std::vector<std::vector<Vertex>> bwd_;
  std::vector<Vertex> active_;
};

/// Immutable finite ordered graph on {1..n}. Edges are stored ascending
/// (u < v) and sorted lexicographically, so an edge's index in edges() is
/// its rank in the lexicographic order.
class OrderedGraph {
 public:
  OrderedGraph() = default;

  /// Pairs given as (v,u) with v > u are normalised. Throws
  /// std::invalid_argument on loops, duplicates or labels outside {1..n}.
  OrderedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  const Adjacency& adjacency() const { return adj_; }

  bool has_edge(Vertex u, Vertex v) const;
  std::optional<std::size_t> edge_index(Vertex u, Vertex v) const;
  std::span<const Vertex> forward(Vertex u) const { return adj_.forward(u); }
  std::span<const Vertex> backward(Vertex v) const { return adj_.backward(v); }
  int degree(Vertex v) const { return adj_.degree(v); }

  /// Subgraph on the same vertex set keeping the edges whose index is not
  /// listed in `removed`.
  OrderedGraph without_edges(std::span<const std::size_t> removed) const;
  /// Subgraph on the same vertex set keeping exactly the listed edge indices.
  OrderedGraph with_edges(std::span<const std::size_t> kept) const;

  friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  Adjacency adj_;
};

/// Order-preserving injection of a pattern into a host; map[i] is the image
/// of pattern vertex i+1.
struct Embedding {
  std::vector<Vertex> map;

  std::size_t pattern_size() const { return map.size(); }
  auto operator<=>(const Embedding&) const = default;
};

/// Interval chromatic number: the fewest order-intervals partitioning the
/// vertices with every interval independent. 0 for the graph on no vertices.
int chi_interval(const OrderedGraph& f);

/// Vertex count of the longest monotone (increasing) path; 1 when edgeless.
int ell_monotone(const OrderedGraph& f);

/// Unordered chromatic number by exact search. Requires n <= 20.
int chromatic_number(const OrderedGraph& f);

/// True when the unordered shadow of f has an odd cycle.
bool has_odd_cycle(const OrderedGraph& f);

/// Ordered blow-up F^(k): vertex i becomes the interval of clones
/// (i-1)k+1 .. ik, and clones of i and j are adjacent iff ij is an edge.
OrderedGraph blowup(const OrderedGraph& f, int k);

/// Two vertex-disjoint copies of f on {1..2n}: one on the positions in
/// `positions` (sorted, |positions| = n) and one on the complement.
OrderedGraph plus_I(const OrderedGraph& f, std::span<const Vertex> positions);

}  // namespace ordturan
