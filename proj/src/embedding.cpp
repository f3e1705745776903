#include "ordturan/embedding.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ordturan {

struct PatternMatcher::Search {
  const PatternMatcher& m;
  const Adjacency& host;
  bool lexicographic;
  std::size_t* nodes;
  const std::function<bool(std::span<const Vertex>)>* visit = nullptr;

  int k = m.pattern_.n();
  int n = host.vertex_count();
  std::vector<Vertex> phi = std::vector<Vertex>(k + 1, 0);
  int placed = 0;
  int needed = 0;
  std::vector<Vertex> hit;  // phi at the first success of an existence search

  Search(const PatternMatcher& matcher, const Adjacency& h, bool lex,
         std::size_t* counter)
      : m(matcher), host(h), lexicographic(lex), nodes(counter) {
    for (Vertex v = 1; v <= k; ++v) {
      if (lexicographic || !m.neighbours_[v].empty()) ++needed;
    }
  }

  bool is_needed(Vertex v) const {
    return lexicographic || !m.neighbours_[v].empty();
  }

  // Feasible host positions for pattern vertex v, leaving room for every
  // pattern vertex between v and the nearest placed ones.
  std::pair<Vertex, Vertex> range(Vertex v) const {
    Vertex lo = v;
    Vertex hi = n - (k - v);
    for (Vertex u = v - 1; u >= 1; --u) {
      if (phi[u] != 0) {
        lo = std::max(lo, phi[u] + (v - u));
        break;
      }
    }
    for (Vertex w = v + 1; w <= k; ++w) {
      if (phi[w] != 0) {
        hi = std::min(hi, phi[w] - (w - v));
        break;
      }
    }
    return {lo, hi};
  }

  bool degree_ok(Vertex v, Vertex c) const {
    return static_cast<int>(host.forward(c).size()) >= m.fwd_degree_[v] &&
           static_cast<int>(host.backward(c).size()) >= m.bwd_degree_[v];
  }

  static bool any_in(std::span<const Vertex> sorted, Vertex lo, Vertex hi) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), lo);
    return it != sorted.end() && *it <= hi;
  }

  // All placed neighbours of v adjacent to c, and every unplaced neighbour
  // of v still has a candidate among the neighbours of c.
  bool consistent(Vertex v, Vertex c) {
    for (Vertex u : m.neighbours_[v]) {
      if (phi[u] != 0 && !host.has(phi[u], c)) return false;
    }
    if (lexicographic) return true;
    phi[v] = c;
    bool ok = true;
    for (Vertex w : m.neighbours_[v]) {
      if (phi[w] != 0) continue;
      auto [lo, hi] = range(w);
      if (lo > hi ||
          !any_in(w > v ? host.forward(c) : host.backward(c), lo, hi)) {
        ok = false;
        break;
      }
    }
    phi[v] = 0;
    return ok;
  }

  // Candidate source for v: the sorted neighbour list of a placed
  // neighbour's image, or the active host vertices, or every host vertex.
  struct Source {
    std::span<const Vertex> list;
    bool all = false;
  };

  Source source(Vertex v) const {
    std::span<const Vertex> best;
    bool found = false;
    for (Vertex u : m.neighbours_[v]) {
      if (phi[u] == 0) continue;
      auto list = u < v ? host.forward(phi[u]) : host.backward(phi[u]);
      if (!found || list.size() < best.size()) {
        best = list;
        found = true;
      }
    }
    if (found) return {best, false};
    if (m.neighbours_[v].empty()) return {{}, true};
    return {host.active(), false};
  }

  std::size_t estimate(Vertex v) const {
    auto [lo, hi] = range(v);
    if (lo > hi) return 0;
    const Source s = source(v);
    if (s.all) return static_cast<std::size_t>(hi - lo + 1);
    auto first = std::lower_bound(s.list.begin(), s.list.end(), lo);
    auto last = std::upper_bound(first, s.list.end(), hi);
    return static_cast<std::size_t>(last - first);
  }

  Vertex choose() const {
    if (lexicographic) {
      for (Vertex v = 1; v <= k; ++v) {
        if (phi[v] == 0) return v;
      }
      return 0;
    }
    Vertex best = 0;
    std::size_t best_count = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 1; v <= k; ++v) {
      if (phi[v] != 0 || !is_needed(v)) continue;
      const std::size_t c = estimate(v);
      if (c < best_count) {
        best = v;
        best_count = c;
        if (c == 0) break;
      }
    }
    return best;
  }

  // Returns false when the search should stop.
  bool run() {
    if (placed == needed) {
      if (visit == nullptr) {
        hit = phi;
        return false;
      }
      return (*visit)(std::span<const Vertex>(phi).subspan(1));
    }
    const Vertex v = choose();
    auto [lo, hi] = range(v);
    if (lo > hi) return true;
    const Source s = source(v);
    auto attempt = [&](Vertex c) -> bool {
      if (nodes) ++*nodes;
      if (!degree_ok(v, c) || !consistent(v, c)) return true;
      phi[v] = c;
      ++placed;
      const bool go_on = run();
      --placed;
      phi[v] = 0;
      return go_on;
    };
    if (s.all) {
      for (Vertex c = lo; c <= hi; ++c) {
        if (!attempt(c)) return false;
      }
    } else {
      auto it = std::lower_bound(s.list.begin(), s.list.end(), lo);
      for (; it != s.list.end() && *it <= hi; ++it) {
        if (!attempt(*it)) return false;
      }
    }
    return true;
  }

  // Pins pattern vertices p<q onto host x<y if feasible.
  bool pin(Vertex p, Vertex q, Vertex x, Vertex y) {
    phi.assign(k + 1, 0);
    placed = 0;
    if (x < p || y > n - (k - q) || y - x < q - p) return false;
    if (!degree_ok(p, x) || !degree_ok(q, y)) return false;
    phi[p] = x;
    if (!consistent(q, y)) {
      phi[p] = 0;
      return false;
    }
    phi[q] = y;
    placed = 2;
    // forward-check p's other neighbours with q in place
    phi[p] = 0;
    const bool ok = consistent(p, x);
    phi[p] = x;
    return ok;
  }
};

PatternMatcher::PatternMatcher(const OrderedGraph& pattern)
    : pattern_(pattern),
      neighbours_(pattern.n() + 1),
      fwd_degree_(pattern.n() + 1, 0),
      bwd_degree_(pattern.n() + 1, 0) {
  for (Vertex v = 1; v <= pattern_.n(); ++v) {
    auto f = pattern_.forward(v);
    auto b = pattern_.backward(v);
    neighbours_[v].assign(b.begin(), b.end());
    neighbours_[v].insert(neighbours_[v].end(), f.begin(), f.end());
    fwd_degree_[v] = static_cast<int>(f.size());
    bwd_degree_[v] = static_cast<int>(b.size());
  }
}

void PatternMatcher::enumerate(
    const Adjacency& host,
    const std::function<bool(std::span<const Vertex>)>& visit,
    std::size_t* nodes) const {
  if (pattern_.n() == 0) {
    throw std::invalid_argument("pattern must have at least one vertex");
  }
  if (pattern_.n() > host.vertex_count()) return;
  Search s(*this, host, true, nodes);
  s.visit = &visit;
  s.run();
}

bool PatternMatcher::exists(const Adjacency& host, std::size_t* nodes) const {
  if (pattern_.n() == 0) {
    throw std::invalid_argument("pattern must have at least one vertex");
  }
  if (pattern_.n() > host.vertex_count()) return false;
  Search s(*this, host, false, nodes);
  return !s.run();
}

bool PatternMatcher::exists_through(const Adjacency& host, Edge through,
                                    std::size_t* nodes) const {
  if (pattern_.n() > host.vertex_count()) return false;
  Search s(*this, host, false, nodes);
  for (const auto& e : pattern_.edges()) {
    if (!s.pin(e.u, e.v, through.u, through.v)) continue;
    if (!s.run()) return true;
  }
  return false;
}

std::optional<Embedding> PatternMatcher::find(const Adjacency& host,
                                              std::size_t* nodes) const {
  if (pattern_.n() == 0) {
    throw std::invalid_argument("pattern must have at least one vertex");
  }
  if (pattern_.n() > host.vertex_count()) return std::nullopt;
  Search s(*this, host, false, nodes);
  if (s.run()) return std::nullopt;
  // fill isolated pattern vertices into the leftmost free slots
  Embedding out;
  out.map.assign(s.hit.begin() + 1, s.hit.end());
  Vertex prev = 0;
  for (int i = 0; i < pattern_.n(); ++i) {
    if (out.map[i] == 0) out.map[i] = prev + 1;
    prev = out.map[i];
  }
  return out;
}

std::vector<Embedding> enumerate_embeddings(const OrderedGraph& g,
                                            const OrderedGraph& f,
                                            std::optional<std::size_t> limit) {
  std::vector<Embedding> out;
  if (limit && *limit == 0) return out;
  PatternMatcher matcher(f);
  matcher.enumerate(g.adjacency(), [&](std::span<const Vertex> image) {
    out.push_back(Embedding{{image.begin(), image.end()}});
    return !limit || out.size() < *limit;
  });
  return out;
}

bool contains(const OrderedGraph& g, const OrderedGraph& f) {
  return PatternMatcher(f).exists(g.adjacency());
}

std::vector<std::size_t> edge_image(const OrderedGraph& g,
                                    const OrderedGraph& f,
                                    std::span<const Vertex> image) {
  std::vector<std::size_t> out;
  out.reserve(f.edge_count());
  for (const auto& e : f.edges()) {
    auto idx = g.edge_index(image[e.u - 1], image[e.v - 1]);
    if (!idx) throw std::logic_error("edge_image: not an embedding");
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ordturan
