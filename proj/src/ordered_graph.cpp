#include "ordturan/ordered_graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace ordturan {

namespace {

void insert_sorted(std::vector<Vertex>& list, Vertex x) {
  list.insert(std::lower_bound(list.begin(), list.end(), x), x);
}

bool erase_sorted(std::vector<Vertex>& list, Vertex x) {
  auto it = std::lower_bound(list.begin(), list.end(), x);
  if (it == list.end() || *it != x) return false;
  list.erase(it);
  return true;
}

}  // namespace

Adjacency::Adjacency(int n) : n_(n), fwd_(n + 1), bwd_(n + 1) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
}

void Adjacency::touch(Vertex v) {
  if (degree(v) == 1) insert_sorted(active_, v);
}

void Adjacency::release(Vertex v) {
  if (degree(v) == 0) erase_sorted(active_, v);
}

bool Adjacency::add(Edge e) {
  if (has(e.u, e.v)) return false;
  insert_sorted(fwd_[e.u], e.v);
  insert_sorted(bwd_[e.v], e.u);
  touch(e.u);
  touch(e.v);
  return true;
}

bool Adjacency::remove(Edge e) {
  if (!erase_sorted(fwd_[e.u], e.v)) return false;
  erase_sorted(bwd_[e.v], e.u);
  release(e.u);
  release(e.v);
  return true;
}

bool Adjacency::has(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const auto& list = fwd_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

OrderedGraph::OrderedGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(n) {
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    if (e.u < 1 || e.v > n_) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) +
                                  ") outside vertex range 1.." +
                                  std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  for (const auto& e : edges_) adj_.add(e);
}

bool OrderedGraph::has_edge(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) return false;
  return adj_.has(u, v);
}

std::optional<std::size_t> OrderedGraph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const Edge key{u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

OrderedGraph OrderedGraph::without_edges(
    std::span<const std::size_t> removed) const {
  std::vector<bool> drop(edges_.size(), false);
  for (auto i : removed) drop.at(i) = true;
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!drop[i]) kept.push_back(edges_[i]);
  }
  return OrderedGraph(n_, std::move(kept));
}

OrderedGraph OrderedGraph::with_edges(std::span<const std::size_t> kept) const {
  std::vector<Edge> out;
  out.reserve(kept.size());
  for (auto i : kept) out.push_back(edges_.at(i));
  return OrderedGraph(n_, std::move(out));
}

// Greedy scan: keep extending the current interval and cut only when the next
// vertex has a neighbour inside it. Cutting as late as possible is optimal:
// given any valid partition, moving each boundary right up to the greedy one
// keeps every interval independent (a prefix of an independent greedy
// interval is independent), so the greedy count is never larger.
int chi_interval(const OrderedGraph& f) {
  if (f.n() == 0) return 0;
  int count = 1;
  Vertex start = 1;
  for (Vertex v = 2; v <= f.n(); ++v) {
    const auto back = f.backward(v);
    // backward list is sorted; its largest element decides
    if (!back.empty() && back.back() >= start) {
      ++count;
      start = v;
    }
  }
  return count;
}

int ell_monotone(const OrderedGraph& f) {
  if (f.n() == 0) return 0;
  std::vector<int> longest(f.n() + 1, 1);
  int best = 1;
  for (Vertex v = 1; v <= f.n(); ++v) {
    for (Vertex u : f.backward(v)) {
      longest[v] = std::max(longest[v], longest[u] + 1);
    }
    best = std::max(best, longest[v]);
  }
  return best;
}

int chromatic_number(const OrderedGraph& f) {
  const int n = f.n();
  if (n > 20) {
    throw std::invalid_argument("chromatic_number: n must be at most 20");
  }
  if (n == 0) return 0;
  if (f.edge_count() == 0) return 1;

  std::vector<int> colour(n + 1, 0);
  std::function<bool(Vertex, int, int)> colourable = [&](Vertex v, int k,
                                                          int used) -> bool {
    if (v > n) return true;
    const int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
      bool clash = false;
      for (Vertex u : f.backward(v)) {
        if (colour[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      colour[v] = c;
      if (colourable(v + 1, k, std::max(used, c))) return true;
    }
    colour[v] = 0;
    return false;
  };

  for (int k = 2; k <= n; ++k) {
    std::fill(colour.begin(), colour.end(), 0);
    if (colourable(1, k, 0)) return k;
  }
  return n;
}

bool has_odd_cycle(const OrderedGraph& f) {
  std::vector<int> side(f.n() + 1, -1);
  for (Vertex s = 1; s <= f.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> queue;
    queue.push(s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop();
      for (auto list : {f.forward(u), f.backward(u)}) {
        for (Vertex w : list) {
          if (side[w] == -1) {
            side[w] = 1 - side[u];
            queue.push(w);
          } else if (side[w] == side[u]) {
            return true;
          }
        }
      }
    }
  }
  return false;
}

OrderedGraph blowup(const OrderedGraph& f, int k) {
  if (k < 1) throw std::invalid_argument("blowup factor must be positive");
  std::vector<Edge> edges;
  edges.reserve(f.edge_count() * static_cast<std::size_t>(k) * k);
  for (const auto& e : f.edges()) {
    for (int a = 1; a <= k; ++a) {
      for (int b = 1; b <= k; ++b) {
        edges.push_back({(e.u - 1) * k + a, (e.v - 1) * k + b});
      }
    }
  }
  return OrderedGraph(f.n() * k, std::move(edges));
}

OrderedGraph plus_I(const OrderedGraph& f, std::span<const Vertex> positions) {
  const int n = f.n();
  if (static_cast<int>(positions.size()) != n) {
    throw std::invalid_argument("plus_I: |I| must equal n");
  }
  std::vector<bool> in_first(2 * n + 1, false);
  Vertex prev = 0;
  for (Vertex p : positions) {
    if (p <= prev || p > 2 * n) {
      throw std::invalid_argument(
          "plus_I: I must be strictly increasing within 1..2n");
    }
    in_first[p] = true;
    prev = p;
  }
  std::vector<Vertex> first, second;
  first.reserve(n);
  second.reserve(n);
  for (Vertex p = 1; p <= 2 * n; ++p) {
    (in_first[p] ? first : second).push_back(p);
  }
  std::vector<Edge> edges;
  edges.reserve(2 * f.edge_count());
  for (const auto& e : f.edges()) {
    edges.push_back({first[e.u - 1], first[e.v - 1]});
    edges.push_back({second[e.u - 1], second[e.v - 1]});
  }
  return OrderedGraph(2 * n, std::move(edges));
}

}  // namespace ordturan
