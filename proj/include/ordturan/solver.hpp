#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ordturan/ordered_graph.hpp"
#include "ordturan/rational.hpp"

namespace ordturan {

enum class SolveStatus { ProvedOptimal, Heuristic, BudgetExhausted };

std::string to_string(SolveStatus s);

/// Best F-free subgraph found for a host. `deleted` lists the removed host
/// edges (sorted; indices into host.edges()), and the host minus `deleted`
/// has been re-checked to be F-free before the report is returned.
struct SolveReport {
  std::size_t host_edges = 0;
  std::size_t optimum = 0;  // edges kept
  std::vector<std::size_t> deleted_indices;
  std::vector<Edge> deleted;
  SolveStatus status = SolveStatus::Heuristic;
  /// Proven lower bound on the minimum deletion count (equals
  /// |deleted| when ProvedOptimal; 0 when nothing is proven).
  std::size_t deletion_lower_bound = 0;
  std::uint64_t nodes_explored = 0;
  std::size_t copies = 0;  // distinct embedding edge-sets used as constraints
  double wall_time = 0.0;  // seconds
};

struct ExactOptions {
  std::uint64_t node_budget = 10'000'000;
  /// Above this many embeddings the constraint list is generated lazily:
  /// candidate deletion sets are checked for a surviving copy, whose edges
  /// become a new constraint.
  std::size_t embedding_cap = 1'000'000;
};

/// Minimum edge deletion making g F-free, as a minimum hitting set over the
/// edge images of all copies of f. Iterative deepening on the deletion size
/// from a disjoint-packing lower bound; within a size, sets are built in
/// increasing edge order so the first hit is the lexicographically smallest
/// optimum. Requires e(f) >= 1.
SolveReport min_deletion_exact(const OrderedGraph& g, const OrderedGraph& f,
                               const ExactOptions& options = {});

enum class OrderPolicy { Given, Random, LowDegreeFirst };

std::string to_string(OrderPolicy p);
OrderPolicy parse_order_policy(const std::string& name);

/// Inserts host edges one at a time in the chosen order, keeping an edge
/// unless it completes a copy of f. Maximal, not maximum.
SolveReport max_free_greedy(const OrderedGraph& g, const OrderedGraph& f,
                            OrderPolicy policy = OrderPolicy::Given,
                            std::uint64_t seed = 0);

/// Bipartite subgraph with at least ceil(e/2) edges: start from the
/// odd/even vertex split and move any vertex with fewer than half its
/// neighbours across until none remains (seed fixes the scan order).
SolveReport bipartite_half(const OrderedGraph& g, std::uint64_t seed = 0);

struct WitnessRatio {
  int index = 0;
  std::size_t host_edges = 0;
  /// Upper bound on the largest F-free subgraph: host_edges minus the
  /// proven deletion lower bound (exact when `certified`).
  std::size_t max_free_upper = 0;
  Rational ratio{0};
  Rational running_min{1};
  bool certified = false;  // exact optimum proven
  SolveStatus status = SolveStatus::Heuristic;
};

using WitnessFamily = std::function<OrderedGraph(int)>;

/// For each index: max F-free fraction of family(index), an upper bound on
/// rho(F); running_min carries the best bound so far.
std::vector<WitnessRatio> rho_upper_from_witness(const WitnessFamily& family,
                                                 const OrderedGraph& f,
                                                 std::span<const int> indices,
                                                 const ExactOptions& options = {});

}  // namespace ordturan
