#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ordturan/densities.hpp"
#include "ordturan/ordered_graph.hpp"
#include "ordturan/point_matching.hpp"
#include "ordturan/solver.hpp"

namespace ordturan::io {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical form: {"n": 5, "edges": [[1, 2], [2, 3]]}, edges ascending and
/// sorted, single line, trailing newline.
std::string graph_to_json(const OrderedGraph& g);

/// Strict parser for the canonical form: each pair ascending, the array
/// sorted lexicographically, no duplicates. Whitespace is free.
OrderedGraph graph_from_json(const std::string& text);

/// Provenance carried in a point-matching file header.
struct MatchingHeader {
  std::string kind = "matching";  // "G(n,eps)", "G_d" or "subgraph"
  int d = 0;
  std::size_t n = 0;
  double eps = 0.0;
  std::uint64_t seed = 0;
  std::string sampler;
};

/// '#'-prefixed header lines, then one "x y depth block" line per edge,
/// coordinates at 17 significant digits so they re-parse exactly.
std::string matching_to_text(const PointMatching& g, const MatchingHeader& header);
PointMatching matching_from_text(const std::string& text, MatchingHeader* header = nullptr);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// %.17g
std::string format_real(double x);

/// Builds a catalog family from its name (case-insensitive) and integer or
/// edge-list parameters: P k, Q a b, B a n, M j, Hd d, Hstair t,
/// pattern u-v ... (optionally n=N).
OrderedGraph build_family(const std::string& name, const std::vector<std::string>& params);

/// "Q:2,2", "pattern:1-6,2-3,4-5", "M:3"; the part after ':' is split on
/// commas and handed to build_family.
OrderedGraph parse_pattern_spec(const std::string& spec);

/// Witness generator for rho-bound: B (param a, index l gives B(a, a l + 1)),
/// M (index k), Hd (index d), P (index k), Hstair (index t). Parameters are
/// "a=2" or a bare "2".
WitnessSpec make_witness(const std::string& family, const std::vector<std::string>& params,
                         const ExactOptions& options);

/// "2..6" or "2,3,5" (mixed allowed: "2..4,7").
std::vector<int> parse_indices(const std::string& text);

/// Edge list as [[u, v], ...].
std::string edges_to_text(const std::vector<Edge>& edges);

/// Deterministic report body; wall time is left out so reruns are identical.
std::string solve_report_text(const SolveReport& r);

std::string bounds_csv_header();
std::string bounds_csv_row(const OrderedGraph& f, const DensityBounds& b);

}  // namespace ordturan::io
