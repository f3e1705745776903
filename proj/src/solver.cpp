#include "ordturan/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ordturan/embedding.hpp"
#include "ordturan/random.hpp"

namespace ordturan {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::ProvedOptimal: return "proved-optimal";
    case SolveStatus::Heuristic: return "heuristic";
    case SolveStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "heuristic";
}

std::string to_string(OrderPolicy p) {
  switch (p) {
    case OrderPolicy::Given: return "given";
    case OrderPolicy::Random: return "random";
    case OrderPolicy::LowDegreeFirst: return "low-degree";
  }
  return "given";
}

OrderPolicy parse_order_policy(const std::string& name) {
  if (name == "given") return OrderPolicy::Given;
  if (name == "random") return OrderPolicy::Random;
  if (name == "low-degree") return OrderPolicy::LowDegreeFirst;
  throw std::invalid_argument("unknown order policy '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Minimum hitting set over sorted element lists drawn from {0..universe-1}.
class HittingSet {
 public:
  explicit HittingSet(std::size_t universe)
      : universe_(universe), containing_(universe), stamp_(universe, 0) {}

  std::size_t size() const { return sets_.size(); }

  bool add(std::vector<std::size_t> set) {
    if (!seen_.insert(set).second) return false;
    const std::size_t id = sets_.size();
    for (auto e : set) containing_[e].push_back(id);
    sets_.push_back(std::move(set));
    order_.push_back(id);
    sorted_ = false;
    return true;
  }

  std::size_t packing_lower_bound() {
    sort_order();
    ++round_;
    std::size_t count = 0;
    for (auto id : order_) {
      const auto& s = sets_[id];
      if (std::any_of(s.begin(), s.end(), [&](auto e) { return stamp_[e] == round_; })) {
        continue;
      }
      for (auto e : s) stamp_[e] = round_;
      ++count;
    }
    return count;
  }

  std::vector<std::size_t> greedy_cover() const {
    std::vector<bool> hit(sets_.size(), false);
    std::size_t remaining = sets_.size();
    std::vector<std::size_t> chosen;
    while (remaining > 0) {
      std::size_t best = 0, best_gain = 0;
      for (std::size_t e = 0; e < universe_; ++e) {
        std::size_t gain = 0;
        for (auto id : containing_[e]) gain += hit[id] ? 0 : 1;
        if (gain > best_gain) {
          best = e;
          best_gain = gain;
        }
      }
      chosen.push_back(best);
      for (auto id : containing_[best]) {
        if (!hit[id]) {
          hit[id] = true;
          --remaining;
        }
      }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

  struct Outcome {
    bool found = false;
    bool aborted = false;
    std::vector<std::size_t> set;
  };

  /// Lexicographically smallest hitting set of size <= k, if any.
  Outcome solve(std::size_t k, std::uint64_t& nodes, std::uint64_t budget) {
    sort_order();
    hits_.assign(sets_.size(), 0);
    unhit_ = sets_.size();
    chosen_.clear();
    Outcome out;
    k_ = k;
    nodes_ = &nodes;
    budget_ = budget;
    aborted_ = false;
    out.found = search(-1);
    out.aborted = aborted_;
    if (out.found) out.set = chosen_;
    return out;
  }

 private:
  void sort_order() {
    if (sorted_) return;
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return sets_[a].size() < sets_[b].size();
    });
    sorted_ = true;
  }

  bool search(long long last) {
    if (++*nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (unhit_ == 0) return true;
    if (chosen_.size() >= k_) return false;

    // the next element may not exceed the largest element of any unhit set
    long long bound = static_cast<long long>(universe_);
    for (auto id : order_) {
      if (hits_[id] == 0) bound = std::min(bound, static_cast<long long>(sets_[id].back()));
    }
    if (bound <= last) return false;

    // disjoint packing of unhit sets restricted to elements above `last`
    ++round_;
    std::size_t packed = 0;
    const std::size_t room = k_ - chosen_.size();
    for (auto id : order_) {
      if (hits_[id] != 0) continue;
      const auto& s = sets_[id];
      bool clash = false;
      for (auto e : s) {
        if (static_cast<long long>(e) > last && stamp_[e] == round_) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      for (auto e : s) {
        if (static_cast<long long>(e) > last) stamp_[e] = round_;
      }
      if (++packed > room) return false;
    }

    for (long long e = last + 1; e <= bound; ++e) {
      const auto& ids = containing_[e];
      if (std::none_of(ids.begin(), ids.end(), [&](auto id) { return hits_[id] == 0; })) {
        continue;
      }
      for (auto id : ids) {
        if (hits_[id]++ == 0) --unhit_;
      }
      chosen_.push_back(static_cast<std::size_t>(e));
      if (search(e)) return true;
      chosen_.pop_back();
      for (auto id : ids) {
        if (--hits_[id] == 0) ++unhit_;
      }
      if (aborted_) return false;
    }
    return false;
  }

  std::size_t universe_;
  std::vector<std::vector<std::size_t>> sets_;
  std::vector<std::size_t> order_;  // by size, stable
  bool sorted_ = true;
  std::vector<std::vector<std::size_t>> containing_;
  std::set<std::vector<std::size_t>> seen_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t round_ = 0;

  std::vector<int> hits_;
  std::size_t unhit_ = 0;
  std::vector<std::size_t> chosen_;
  std::size_t k_ = 0;
  std::uint64_t* nodes_ = nullptr;
  std::uint64_t budget_ = 0;
  bool aborted_ = false;
};

Adjacency residual(const OrderedGraph& g, std::span<const std::size_t> deleted) {
  Adjacency adj = g.adjacency();
  for (auto i : deleted) adj.remove(g.edge(i));
  return adj;
}

void fill_report(SolveReport& r, const OrderedGraph& g, const OrderedGraph& f,
                 std::vector<std::size_t> deleted) {
  std::sort(deleted.begin(), deleted.end());
  r.host_edges = g.edge_count();
  r.deleted.clear();
  for (auto i : deleted) r.deleted.push_back(g.edge(i));
  r.deleted_indices = std::move(deleted);
  r.optimum = r.host_edges - r.deleted_indices.size();
  if (f.edge_count() > 0 && PatternMatcher(f).exists(residual(g, r.deleted_indices))) {
    throw std::logic_error("solver produced a subgraph that still contains the pattern");
  }
}

}  // namespace

SolveReport min_deletion_exact(const OrderedGraph& g, const OrderedGraph& f,
                               const ExactOptions& options) {
  if (f.edge_count() == 0) {
    throw std::invalid_argument("min_deletion_exact: pattern needs an edge");
  }
  const auto start = Clock::now();
  SolveReport report;
  const PatternMatcher matcher(f);
  HittingSet constraints(g.edge_count());

  std::size_t enumeration_nodes = 0;
  matcher.enumerate(
      g.adjacency(),
      [&](std::span<const Vertex> image) {
        constraints.add(edge_image(g, f, image));
        return constraints.size() <= options.embedding_cap;
      },
      &enumeration_nodes);
  report.nodes_explored = enumeration_nodes;

  // copy of f surviving in g minus `deleted`, as a host edge-index set
  auto surviving_copy = [&](std::span<const std::size_t> deleted)
      -> std::optional<std::vector<std::size_t>> {
    auto found = matcher.find(residual(g, deleted));
    if (!found) return std::nullopt;
    return edge_image(g, f, found->map);
  };

  std::size_t k = constraints.packing_lower_bound();
  std::vector<std::size_t> best;
  bool optimal = false;
  while (k <= g.edge_count()) {
    auto outcome = constraints.solve(k, report.nodes_explored, options.node_budget);
    if (outcome.aborted) break;
    if (!outcome.found) {
      ++k;
      continue;
    }
    if (auto copy = surviving_copy(outcome.set)) {
      if (!constraints.add(std::move(*copy))) {
        throw std::logic_error("hitting set missed a known copy");
      }
      continue;
    }
    best = std::move(outcome.set);
    optimal = true;
    break;
  }

  if (optimal) {
    report.status = SolveStatus::ProvedOptimal;
    report.deletion_lower_bound = best.size();
  } else {
    report.status = SolveStatus::BudgetExhausted;
    report.deletion_lower_bound = k;
    best = constraints.greedy_cover();
    while (auto copy = surviving_copy(best)) {
      best.push_back(copy->front());
    }
  }
  report.copies = constraints.size();
  fill_report(report, g, f, std::move(best));
  report.wall_time = seconds_since(start);
  return report;
}

SolveReport max_free_greedy(const OrderedGraph& g, const OrderedGraph& f,
                            OrderPolicy policy, std::uint64_t seed) {
  if (f.edge_count() == 0) {
    throw std::invalid_argument("max_free_greedy: pattern needs an edge");
  }
  const auto start = Clock::now();
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (policy == OrderPolicy::Random) {
    Rng rng(seed);
    rng.shuffle(std::span<std::size_t>(order));
  } else if (policy == OrderPolicy::LowDegreeFirst) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto& ea = g.edge(a);
      const auto& eb = g.edge(b);
      return g.degree(ea.u) + g.degree(ea.v) < g.degree(eb.u) + g.degree(eb.v);
    });
  }

  SolveReport report;
  const PatternMatcher matcher(f);
  Adjacency kept(g.n());
  std::vector<std::size_t> deleted;
  std::size_t nodes = 0;
  for (auto i : order) {
    const Edge e = g.edge(i);
    kept.add(e);
    if (matcher.exists_through(kept, e, &nodes)) {
      kept.remove(e);
      deleted.push_back(i);
    }
  }
  report.status = SolveStatus::Heuristic;
  report.nodes_explored = nodes;
  fill_report(report, g, f, std::move(deleted));
  report.wall_time = seconds_since(start);
  return report;
}

SolveReport bipartite_half(const OrderedGraph& g, std::uint64_t seed) {
  const auto start = Clock::now();
  const int n = g.n();
  std::vector<int> side(n + 1);
  for (Vertex v = 1; v <= n; ++v) side[v] = v % 2;
  std::vector<Vertex> scan(n);
  std::iota(scan.begin(), scan.end(), 1);
  Rng rng(seed);
  rng.shuffle(std::span<Vertex>(scan));

  std::uint64_t moves = 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : scan) {
      int across = 0;
      for (auto list : {g.forward(v), g.backward(v)}) {
        for (Vertex w : list) across += side[w] != side[v] ? 1 : 0;
      }
      // each flip strictly grows the cut, so this terminates
      if (2 * across < g.degree(v)) {
        side[v] = 1 - side[v];
        changed = true;
        ++moves;
      }
    }
  }

  SolveReport report;
  std::vector<std::size_t> deleted;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (side[g.edge(i).u] == side[g.edge(i).v]) deleted.push_back(i);
  }
  report.status = SolveStatus::Heuristic;
  report.nodes_explored = moves;
  fill_report(report, g, OrderedGraph(), std::move(deleted));
  if (has_odd_cycle(g.without_edges(report.deleted_indices))) {
    throw std::logic_error("bipartite_half kept an odd cycle");
  }
  report.wall_time = seconds_since(start);
  return report;
}

std::vector<WitnessRatio> rho_upper_from_witness(const WitnessFamily& family,
                                                 const OrderedGraph& f,
                                                 std::span<const int> indices,
                                                 const ExactOptions& options) {
  std::vector<WitnessRatio> out;
  Rational running{1};
  for (int index : indices) {
    const OrderedGraph g = family(index);
    if (g.edge_count() == 0) {
      throw std::invalid_argument("witness host " + std::to_string(index) + " has no edges");
    }
    const SolveReport r = min_deletion_exact(g, f, options);
    WitnessRatio w;
    w.index = index;
    w.host_edges = g.edge_count();
    w.max_free_upper = g.edge_count() - r.deletion_lower_bound;
    w.ratio = Rational(static_cast<std::int64_t>(w.max_free_upper),
                       static_cast<std::int64_t>(w.host_edges));
    w.status = r.status;
    w.certified = r.status == SolveStatus::ProvedOptimal;
    running = std::min(running, w.ratio);
    w.running_min = running;
    out.push_back(w);
  }
  return out;
}

}  // namespace ordturan
