#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "ordturan/interval_union.hpp"
#include "ordturan/point_matching.hpp"

namespace ordturan {

/// Piecewise bound: 2^(d-1) t^2 up to the knee t = 2^-(d-1), then
/// 2t - 2^-(d-1). Convex, non-decreasing, continuous. Requires t in [0,1].
double f_d(int d, double t);

/// The three-way split of a subgraph of G_d and the sets built from it:
/// A lives in (0,1), B in (1,2), C crosses 1; I = C(A), J = C(B), and
/// I' (J') is the union of hulls of L(C) (R(C)) within each gap of I (J).
struct ClaimDecomposition {
  std::size_t a_edges = 0, b_edges = 0, c_edges = 0;
  IntervalUnion left_cover;    // I
  IntervalUnion right_cover;   // J
  IntervalUnion left_hulls;    // I'
  IntervalUnion right_hulls;   // J'
  double covered_length = 0.0; // |C(H)|
  /// no C edge joins I to J
  bool no_cover_to_cover = true;
  /// every C edge lies in (I' x J') u (I' x J) u (I x J')
  bool crossing_edges_placed = true;
  /// |I| + |J| + |I'| + |J'| <= |C(H)|
  bool lengths_fit = true;
};

ClaimDecomposition decompose_for_claim(const PointMatching& h);

struct ClaimResult {
  bool holds = false;
  double t = 0.0;         // |C(H)| / 2
  double bound = 0.0;     // f_d(t) 2^(d-1) n + 10^d eps n
  double slack = 0.0;     // bound - e(H)
  std::size_t edges = 0;  // e(H)
  ClaimDecomposition parts;
};

class ClaimHypothesisViolated : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks e(H) <= f_d(t) 2^(d-1) n + 10^d eps n for an M'-free H inside the
/// built host `g` (M' = {13,25,46}). Throws ClaimHypothesisViolated if an
/// edge of H is not an edge of g or H contains M'.
ClaimResult check_claim(const PointMatching& h, const PointMatching& g, int d,
                        std::size_t n, double eps);

/// Greedy maximal M'-free subgraph of a point matching, inserting edges in a
/// seeded random order.
PointMatching greedy_free_subgraph(const PointMatching& g, std::uint64_t seed);

}  // namespace ordturan
