#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordturan/ordered_graph.hpp"
#include "ordturan/rational.hpp"
#include "ordturan/solver.hpp"

namespace ordturan {

/// Ordered Turan density (chi_< - 2)/(chi_< - 1). Rejects edgeless F.
Rational vec_pi(const OrderedGraph& f);

/// Unordered Turan density (chi - 2)/(chi - 1). Requires n <= 20, e(F) >= 1.
Rational pi_unordered(const OrderedGraph& f);

/// (l - 2)/(2(l - 1)) with l the longest monotone path; 0 when l <= 2.
Rational rho_lower_ell(const OrderedGraph& f);

struct WitnessSpec {
  std::string name;  // e.g. "B[a=2]"
  WitnessFamily family;
  std::vector<int> indices;
  ExactOptions options;
};

/// Certified bracket for rho(F); rho itself is never claimed.
struct DensityBounds {
  std::string pattern_id;
  Rational vec_pi{0};
  std::optional<Rational> pi;  // when n <= 20
  Rational rho_lower{0};
  std::string lower_provenance;
  Rational rho_upper{1};
  std::string upper_provenance;
  std::vector<WitnessRatio> witnesses;
  bool valid = false;  // rho_lower <= rho_upper
};

/// rho_lower = max(ell bound, 1/2 when F has an odd cycle);
/// rho_upper = min(vec_pi, witness ratios).
DensityBounds bounds_report(const OrderedGraph& f, const std::string& pattern_id,
                            const std::optional<WitnessSpec>& witness = std::nullopt);

}  // namespace ordturan
