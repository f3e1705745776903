#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ordturan/point_matching.hpp"

namespace ordturan {

/// How candidate quasi-random matchings are drawn before certification.
///
/// Uniform draws n independent edges with uniform endpoints in (0,1) and
/// (1,2). Lattice draws a randomly shifted rank-1 lattice
///   x_i = (i + u)/n,  y_i = 1 + ((a*i mod n) + w)/n
/// whose generator a is chosen among those with the smallest sum of
/// continued-fraction partial quotients of a/n. Auto picks Uniform once
/// n >= (20/eps)^2 and Lattice below that, where independent sampling cannot
/// reach the grid tolerance.
enum class Sampler { Auto, Uniform, Lattice };

std::string to_string(Sampler s);
Sampler parse_sampler(const std::string& name);

struct QuasirandomOptions {
  int resample_budget = 100;
  Sampler sampler = Sampler::Auto;
};

/// Outcome of the discretised discrepancy certificate.
struct Certificate {
  bool passed = false;
  double max_deviation = 0.0;  // max |e(I,J) - |I||J|n| over grid runs
  double tolerance = 0.0;      // eps*n/10
  int grid = 0;                // t = ceil(50/eps)
  // worst run pair, as grid cell ranges [i_lo, i_hi) x [j_lo, j_hi)
  int i_lo = 0, i_hi = 0, j_lo = 0, j_hi = 0;
};

class ResampleBudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Partitions (0,1) and (1,2) into t = ceil(50/eps) equal cells and checks
/// |e(I,J) - |I||J|n| <= eps*n/10 for every pair of runs of consecutive
/// cells. For a fixed left run the deviation over right runs [j1,j2) is
/// S(j2) - S(j1) with S a prefix function, so the maximum is max S - min S;
/// the whole certificate costs O(t^3) after a 2D histogram.
Certificate certify_quasirandom(const PointMatching& g, double eps);

struct QuasirandomDraw {
  PointMatching graph;
  Certificate certificate;
  int attempts = 0;
  Sampler sampler = Sampler::Uniform;
};

/// Generate-and-certify: draws candidates from per-attempt streams of `seed`
/// until one passes certify_quasirandom. Throws ResampleBudgetExhausted.
QuasirandomDraw generate_quasirandom(std::size_t n, double eps, std::uint64_t seed,
                                     const QuasirandomOptions& options = {});

PointMatching gen_quasirandom(std::size_t n, double eps, std::uint64_t seed,
                              const QuasirandomOptions& options = {});

inline constexpr int kMaxGd = 8;

/// G_1 = G(n,eps) and G_(k+1) = G_k/2  u  (1 + G_k/2)  u  G(2^k n, eps).
/// The level-1 layer uses `seed` itself (so build_G_d(1,...) equals
/// gen_quasirandom(n, eps, seed)); level k >= 2 uses mix_seed(seed, k).
/// e(G_d) = d 2^(d-1) n. Requires 1 <= d <= 8.
PointMatching build_G_d(int d, std::size_t n, double eps, std::uint64_t seed,
                        const QuasirandomOptions& options = {});

}  // namespace ordturan
