#include "ordturan/quasirandom.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <unordered_set>

#include "ordturan/random.hpp"

namespace ordturan {

std::string to_string(Sampler s) {
  switch (s) {
    case Sampler::Auto: return "auto";
    case Sampler::Uniform: return "uniform";
    case Sampler::Lattice: return "lattice";
  }
  return "auto";
}

Sampler parse_sampler(const std::string& name) {
  if (name == "auto") return Sampler::Auto;
  if (name == "uniform") return Sampler::Uniform;
  if (name == "lattice") return Sampler::Lattice;
  throw std::invalid_argument("unknown sampler '" + name + "'");
}

Certificate certify_quasirandom(const PointMatching& g, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  if (!g.is_bipartite_across_one()) {
    throw std::invalid_argument("certify_quasirandom: matching must cross 1");
  }
  Certificate cert;
  const int t = static_cast<int>(std::ceil(50.0 / eps));
  const double n = static_cast<double>(g.size());
  cert.grid = t;
  cert.tolerance = eps * n / 10.0;

  using Grid = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Grid prefix = Grid::Zero(t + 1, t + 1);
  for (const auto& e : g.edges()) {
    const int i = std::min(t - 1, static_cast<int>(e.x * t));
    const int j = std::min(t - 1, static_cast<int>((e.y - 1.0) * t));
    prefix(i + 1, j + 1) += 1.0;
  }
  for (int i = 1; i <= t; ++i) {
    for (int j = 1; j <= t; ++j) {
      prefix(i, j) += prefix(i - 1, j) + prefix(i, j - 1) - prefix(i - 1, j - 1);
    }
  }

  const double inv_t = 1.0 / t;
  for (int i1 = 0; i1 < t; ++i1) {
    for (int i2 = i1 + 1; i2 <= t; ++i2) {
      const double slope = (i2 - i1) * inv_t * inv_t * n;
      double lo = 0.0, hi = 0.0;  // S(0) = 0
      int lo_at = 0, hi_at = 0;
      for (int j = 1; j <= t; ++j) {
        const double s = prefix(i2, j) - prefix(i1, j) - slope * j;
        if (s < lo) {
          lo = s;
          lo_at = j;
        } else if (s > hi) {
          hi = s;
          hi_at = j;
        }
      }
      if (hi - lo > cert.max_deviation) {
        cert.max_deviation = hi - lo;
        cert.i_lo = i1;
        cert.i_hi = i2;
        cert.j_lo = std::min(lo_at, hi_at);
        cert.j_hi = std::max(lo_at, hi_at);
      }
    }
  }
  cert.passed = cert.max_deviation <= cert.tolerance;
  return cert;
}

namespace {

std::vector<PointEdge> draw_uniform(std::size_t n, Rng& rng) {
  std::vector<PointEdge> edges;
  edges.reserve(n);
  std::unordered_set<double> seen;
  seen.reserve(2 * n);
  while (edges.size() < n) {
    const double x = rng.open01();
    const double y = 1.0 + rng.open01_coarse();
    if (seen.contains(x) || seen.contains(y)) continue;  // redraw this edge
    seen.insert(x);
    seen.insert(y);
    edges.push_back({x, y, 0, 0});
  }
  return edges;
}

// Rank-1 lattice generators for n, best first by the sum of the partial
// quotients of a/n (small quotients mean low discrepancy).
std::vector<std::uint64_t> lattice_generators(std::uint64_t n, std::size_t keep) {
  if (n <= 2) return {n == 1 ? 0u : 1u};
  std::vector<std::pair<std::uint64_t, std::uint64_t>> scored;
  for (std::uint64_t a = 1; a < n; ++a) {
    if (std::gcd(a, n) != 1) continue;
    std::uint64_t p = n, q = a, sum = 0;
    while (q != 0) {
      sum += p / q;
      p = std::exchange(q, p % q);
    }
    scored.emplace_back(sum, a);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < std::min(keep, scored.size()); ++i) {
    out.push_back(scored[i].second);
  }
  return out;
}

std::optional<std::vector<PointEdge>> draw_lattice(std::size_t n, std::uint64_t a,
                                                   Rng& rng) {
  const double u = rng.open01();
  const double w = rng.open01();
  const double scale = static_cast<double>(n);
  std::vector<PointEdge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = (static_cast<double>(i) + u) / scale;
    const auto row = static_cast<double>((a * i) % n);
    const double y = 1.0 + (row + w) / scale;
    if (!(x > 0.0 && x < 1.0 && y > 1.0 && y < 2.0)) return std::nullopt;
    edges.push_back({x, y, 0, 0});
  }
  return edges;
}

}  // namespace

QuasirandomDraw generate_quasirandom(std::size_t n, double eps, std::uint64_t seed,
                                     const QuasirandomOptions& options) {
  if (n == 0) throw std::invalid_argument("quasi-random matching needs n >= 1");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  Sampler sampler = options.sampler;
  if (sampler == Sampler::Auto) {
    const double floor = (20.0 / eps) * (20.0 / eps);
    sampler = static_cast<double>(n) >= floor ? Sampler::Uniform : Sampler::Lattice;
  }
  std::vector<std::uint64_t> generators;
  if (sampler == Sampler::Lattice) generators = lattice_generators(n, 8);

  Certificate last;
  for (int attempt = 0; attempt < options.resample_budget; ++attempt) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(attempt)));
    std::vector<PointEdge> edges;
    if (sampler == Sampler::Uniform) {
      edges = draw_uniform(n, rng);
    } else {
      auto drawn = draw_lattice(n, generators[attempt % generators.size()], rng);
      if (!drawn) continue;
      edges = std::move(*drawn);
    }
    PointMatching g(std::move(edges));
    last = certify_quasirandom(g, eps);
    if (last.passed) return {std::move(g), last, attempt + 1, sampler};
  }
  throw ResampleBudgetExhausted(
      "no certified G(n,eps) for n=" + std::to_string(n) + " eps=" +
      std::to_string(eps) + " within " + std::to_string(options.resample_budget) +
      " resamples (last max deviation " + std::to_string(last.max_deviation) +
      " > tolerance " + std::to_string(last.tolerance) + ")");
}

PointMatching gen_quasirandom(std::size_t n, double eps, std::uint64_t seed,
                              const QuasirandomOptions& options) {
  return generate_quasirandom(n, eps, seed, options).graph;
}

namespace {

bool has_collision(const std::vector<PointEdge>& edges) {
  std::vector<double> points;
  points.reserve(2 * edges.size());
  for (const auto& e : edges) {
    points.push_back(e.x);
    points.push_back(e.y);
  }
  std::sort(points.begin(), points.end());
  return std::adjacent_find(points.begin(), points.end()) != points.end();
}

}  // namespace

PointMatching build_G_d(int d, std::size_t n, double eps, std::uint64_t seed,
                        const QuasirandomOptions& options) {
  if (d < 1) throw std::invalid_argument("G_d requires d >= 1");
  if (d > kMaxGd) throw std::invalid_argument("G_d size guard: d <= 8");

  PointMatching current = gen_quasirandom(n, eps, seed, options);
  for (int level = 2; level <= d; ++level) {
    std::vector<PointEdge> halves;
    halves.reserve(2 * current.size());
    for (const auto& e : current.edges()) {
      halves.push_back({e.x / 2.0, e.y / 2.0, e.depth + 1, e.block});
      halves.push_back({1.0 + e.x / 2.0, 1.0 + e.y / 2.0, e.depth + 1,
                        e.block + (std::uint32_t{1} << e.depth)});
    }
    if (has_collision(halves)) {
      throw std::logic_error("G_d: rescaled copies collide in floating point");
    }
    const std::size_t layer_size = n << (level - 1);
    for (std::uint64_t retry = 0;; ++retry) {
      if (retry >= static_cast<std::uint64_t>(options.resample_budget)) {
        throw ResampleBudgetExhausted("G_d: layer keeps colliding with copies");
      }
      const std::uint64_t layer_seed =
          mix_seed(seed, static_cast<std::uint64_t>(level) + 1000 * retry);
      PointMatching layer = gen_quasirandom(layer_size, eps, layer_seed, options);
      std::vector<PointEdge> all = halves;
      all.insert(all.end(), layer.edges().begin(), layer.edges().end());
      if (has_collision(all)) continue;
      current = PointMatching(std::move(all));
      break;
    }
  }
  return current;
}

}  // namespace ordturan
