#include "ordturan/densities.hpp"

#include <stdexcept>

namespace ordturan {

Rational vec_pi(const OrderedGraph& f) {
  if (f.edge_count() == 0) throw std::invalid_argument("vec_pi: pattern has no edges");
  const int chi = chi_interval(f);
  return Rational(chi - 2, chi - 1);
}

Rational pi_unordered(const OrderedGraph& f) {
  if (f.edge_count() == 0) throw std::invalid_argument("pi_unordered: pattern has no edges");
  const int chi = chromatic_number(f);
  return Rational(chi - 2, chi - 1);
}

Rational rho_lower_ell(const OrderedGraph& f) {
  const int ell = ell_monotone(f);
  if (ell <= 2) return Rational(0);
  return Rational(ell - 2, 2 * (ell - 1));
}

DensityBounds bounds_report(const OrderedGraph& f, const std::string& pattern_id,
                            const std::optional<WitnessSpec>& witness) {
  DensityBounds out;
  out.pattern_id = pattern_id;
  out.vec_pi = vec_pi(f);
  if (f.n() <= 20) out.pi = pi_unordered(f);

  out.rho_lower = rho_lower_ell(f);
  out.lower_provenance = "monotone-path";
  if (has_odd_cycle(f) && Rational(1, 2) > out.rho_lower) {
    out.rho_lower = Rational(1, 2);
    out.lower_provenance = "bipartite-half";
  }

  out.rho_upper = out.vec_pi;
  out.upper_provenance = "interval-chromatic";
  if (witness) {
    out.witnesses = rho_upper_from_witness(witness->family, f, witness->indices,
                                           witness->options);
    for (const auto& w : out.witnesses) {
      if (w.ratio < out.rho_upper) {
        out.rho_upper = w.ratio;
        out.upper_provenance = "witness " + witness->name + " index " +
                               std::to_string(w.index) +
                               (w.certified ? "" : " (deletion lower bound)");
      }
    }
  }
  out.valid = out.rho_lower <= out.rho_upper;
  return out;
}

}  // namespace ordturan
