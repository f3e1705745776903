// ordturan: build ordered-graph families, solve max F-free subgraphs, and run
// the verification suites.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordturan/catalog.hpp"
#include "ordturan/claim.hpp"
#include "ordturan/densities.hpp"
#include "ordturan/io.hpp"
#include "ordturan/quasirandom.hpp"
#include "ordturan/solver.hpp"
#include "verify.hpp"

namespace {

using namespace ordturan;
using Json = nlohmann::ordered_json;

struct Global {
  std::uint64_t seed = 1;
  std::uint64_t budget_nodes = 10'000'000;
  int budget_resample = 100;
  std::string out;
  std::string format = "text";
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    io::write_file(g.out, text);
  }
}

ExactOptions exact_options(const Global& g) {
  ExactOptions o;
  o.node_budget = g.budget_nodes;
  return o;
}

QuasirandomOptions qr_options(const Global& g, const std::string& sampler) {
  QuasirandomOptions o;
  o.resample_budget = g.budget_resample;
  o.sampler = parse_sampler(sampler);
  return o;
}

// A path to a graph file, or a family spec such as "Q:2,2".
OrderedGraph load_graph(const std::string& ref) {
  if (std::filesystem::is_regular_file(ref)) return io::graph_from_json(io::read_file(ref));
  return io::parse_pattern_spec(ref);
}

std::string wall(double seconds) { return io::format_real(seconds) + " s"; }

Json edges_json(const std::vector<Edge>& edges) {
  Json a = Json::array();
  for (const auto& e : edges) a.push_back({e.u, e.v});
  return a;
}

std::string report_json(const SolveReport& r) {
  Json j;
  j["host_edges"] = r.host_edges;
  j["optimum"] = r.optimum;
  j["deleted"] = edges_json(r.deleted);
  j["status"] = to_string(r.status);
  j["deletion_lower_bound"] = r.deletion_lower_bound;
  j["nodes"] = r.nodes_explored;
  j["copies"] = r.copies;
  return j.dump() + "\n";
}

std::string report_csv(const SolveReport& r) {
  std::string out = "host_edges,optimum,deleted_count,status,deletion_lower_bound,nodes,copies\n";
  out += std::to_string(r.host_edges) + "," + std::to_string(r.optimum) + "," +
         std::to_string(r.deleted.size()) + "," + to_string(r.status) + "," +
         std::to_string(r.deletion_lower_bound) + "," + std::to_string(r.nodes_explored) + "," +
         std::to_string(r.copies) + "\n";
  return out;
}

std::string witness_table(const std::vector<WitnessRatio>& rows, const std::string& format) {
  std::string out;
  if (format == "json") {
    Json a = Json::array();
    for (const auto& w : rows) {
      a.push_back({{"index", w.index},
                   {"host_edges", w.host_edges},
                   {"max_free_upper", w.max_free_upper},
                   {"ratio", to_string(w.ratio)},
                   {"running_min", to_string(w.running_min)},
                   {"certified", w.certified},
                   {"status", to_string(w.status)}});
    }
    return a.dump() + "\n";
  }
  const char sep = format == "csv" ? ',' : ' ';
  out = std::string("index") + sep + "host_edges" + sep + "max_free_upper" + sep + "ratio" + sep +
        "running_min" + sep + "certified" + sep + "status\n";
  for (const auto& w : rows) {
    out += std::to_string(w.index) + sep + std::to_string(w.host_edges) + sep +
           std::to_string(w.max_free_upper) + sep + to_string(w.ratio) + sep +
           to_string(w.running_min) + sep + (w.certified ? "yes" : "no") + sep +
           to_string(w.status) + "\n";
  }
  return out;
}

std::string bounds_text(const OrderedGraph& f, const DensityBounds& b, const std::string& format) {
  if (format == "csv") return io::bounds_csv_header() + io::bounds_csv_row(f, b);
  if (format == "json") {
    Json j;
    j["pattern"] = b.pattern_id;
    j["n"] = f.n();
    j["e"] = f.edge_count();
    j["chi_lt"] = chi_interval(f);
    j["ell"] = ell_monotone(f);
    j["vec_pi"] = to_string(b.vec_pi);
    j["pi"] = b.pi ? to_string(*b.pi) : "-";
    j["rho_lower"] = to_string(b.rho_lower);
    j["lower_provenance"] = b.lower_provenance;
    j["rho_upper"] = to_string(b.rho_upper);
    j["upper_provenance"] = b.upper_provenance;
    j["valid"] = b.valid;
    return j.dump() + "\n";
  }
  std::string out;
  out += "pattern " + b.pattern_id + "\n";
  out += "chi_lt " + std::to_string(chi_interval(f)) + "\n";
  out += "ell " + std::to_string(ell_monotone(f)) + "\n";
  out += "vec_pi " + to_string(b.vec_pi) + "\n";
  out += "pi " + (b.pi ? to_string(*b.pi) : std::string("-")) + "\n";
  out += "rho_lower " + to_string(b.rho_lower) + " (" + b.lower_provenance + ")\n";
  out += "rho_upper " + to_string(b.rho_upper) + " (" + b.upper_provenance + ")\n";
  out += std::string("valid ") + (b.valid ? "yes" : "no") + "\n";
  return out;
}

std::string certificate_text(const Certificate& c) {
  std::string out;
  out += std::string("passed ") + (c.passed ? "yes" : "no") + "\n";
  out += "max_deviation " + io::format_real(c.max_deviation) + "\n";
  out += "tolerance " + io::format_real(c.tolerance) + "\n";
  out += "grid " + std::to_string(c.grid) + "\n";
  out += "worst_cells " + std::to_string(c.i_lo) + ".." + std::to_string(c.i_hi) + " x " +
         std::to_string(c.j_lo) + ".." + std::to_string(c.j_hi) + "\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extremal combinatorics of vertex-ordered graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "RNG seed")->capture_default_str();
  app.add_option("--budget-nodes", g.budget_nodes, "branch node budget for exact solves")
      ->capture_default_str();
  app.add_option("--budget-resample", g.budget_resample,
                 "resample attempts for quasi-random generation")
      ->capture_default_str();
  app.add_option("--out", g.out, "write the result to this file instead of stdout");
  app.add_option("--format", g.format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  int code = 0;

  // build
  auto* build = app.add_subcommand("build", "emit a catalog graph (P, Q, B, M, pattern, Hd, Hstair)");
  std::string family;
  std::vector<std::string> params;
  build->add_option("family", family)->required();
  build->add_option("params", params, "integers, or u-v edges (and n=N) for pattern");
  build->callback([&] { emit(g, io::graph_to_json(io::build_family(family, params))); });

  // gen-qr
  auto* gen_qr = app.add_subcommand("gen-qr", "generate and certify G(n, eps)");
  std::size_t qr_n = 0;
  double eps = 0.2;
  std::string sampler = "auto";
  gen_qr->add_option("--n", qr_n, "edge count")->required();
  gen_qr->add_option("--eps", eps)->required();
  gen_qr->add_option("--sampler", sampler, "auto, uniform or lattice")->capture_default_str();
  gen_qr->callback([&] {
    const auto draw = generate_quasirandom(qr_n, eps, g.seed, qr_options(g, sampler));
    io::MatchingHeader h{"G(n,eps)", 1, qr_n, eps, g.seed, to_string(draw.sampler)};
    emit(g, io::matching_to_text(draw.graph, h));
    std::cerr << "certified after " << draw.attempts << " attempt(s), max deviation "
              << io::format_real(draw.certificate.max_deviation) << " <= "
              << io::format_real(draw.certificate.tolerance) << "\n";
  });

  // gen-gd
  auto* gen_gd = app.add_subcommand("gen-gd", "build the recursive host G_d");
  int d = 1;
  std::size_t base_n = 0;
  gen_gd->add_option("--d", d)->required();
  gen_gd->add_option("--n", base_n, "base edge count")->required();
  gen_gd->add_option("--eps", eps)->required();
  gen_gd->add_option("--sampler", sampler, "auto, uniform or lattice")->capture_default_str();
  gen_gd->callback([&] {
    const auto gd = build_G_d(d, base_n, eps, g.seed, qr_options(g, sampler));
    io::MatchingHeader h{"G_d", d, base_n, eps, g.seed, sampler};
    emit(g, io::matching_to_text(gd, h));
  });

  // certify
  auto* certify = app.add_subcommand("certify", "check the discretised discrepancy certificate");
  std::string matching_file;
  certify->add_option("matching", matching_file, "point-matching file")->required();
  certify->add_option("--eps", eps)->required();
  certify->callback([&] {
    const auto m = io::matching_from_text(io::read_file(matching_file));
    const auto c = certify_quasirandom(m, eps);
    emit(g, certificate_text(c));
    if (!c.passed) code = 1;
  });

  // claim-check
  auto* claim = app.add_subcommand("claim-check",
                                   "check the covered-length bound on an M'-free subgraph of G_d");
  std::string host_file, sub_file;
  claim->add_option("--d", d)->required();
  claim->add_option("--n", base_n, "base edge count")->required();
  claim->add_option("--eps", eps)->required();
  claim->add_option("--host", host_file, "G_d file (default: build from --seed)");
  claim->add_option("--subgraph", sub_file, "subgraph file (default: greedy M'-free)");
  claim->callback([&] {
    const auto host = host_file.empty()
                          ? build_G_d(d, base_n, eps, g.seed, qr_options(g, "auto"))
                          : io::matching_from_text(io::read_file(host_file));
    const auto h = sub_file.empty() ? greedy_free_subgraph(host, g.seed)
                                    : io::matching_from_text(io::read_file(sub_file));
    const auto r = check_claim(h, host, d, base_n, eps);
    std::string out;
    out += std::string("holds ") + (r.holds ? "yes" : "no") + "\n";
    out += "edges " + std::to_string(r.edges) + "\n";
    out += "host_edges " + std::to_string(host.size()) + "\n";
    out += "t " + io::format_real(r.t) + "\n";
    out += "bound " + io::format_real(r.bound) + "\n";
    out += "slack " + io::format_real(r.slack) + "\n";
    out += "parts A " + std::to_string(r.parts.a_edges) + " B " + std::to_string(r.parts.b_edges) +
           " C " + std::to_string(r.parts.c_edges) + "\n";
    out += "covered_intervals " + std::to_string(covered_set(h).count()) + "\n";
    emit(g, out);
    if (!r.holds) code = 1;
  });

  // solve
  auto* solve = app.add_subcommand("solve", "largest F-free subgraph of a host");
  std::string host_ref, pattern_ref, policy = "random";
  bool use_greedy = false, use_bipartite = false;
  solve->add_option("--host", host_ref, "graph file or family spec")->required();
  solve->add_option("--pattern", pattern_ref, "graph file or family spec")->required();
  solve->add_flag("--exact", "exact minimum deletion (default)");
  solve->add_flag("--greedy", use_greedy, "greedy maximal F-free subgraph");
  solve->add_flag("--bipartite", use_bipartite, "bipartite subgraph with >= e/2 edges");
  solve->add_option("--policy", policy, "greedy order: given, random, low-degree")
      ->capture_default_str();
  solve->add_option("--budget", g.budget_nodes, "alias of --budget-nodes");
  solve->callback([&] {
    const auto host = load_graph(host_ref);
    const auto f = load_graph(pattern_ref);
    SolveReport r;
    if (use_bipartite) {
      r = bipartite_half(host, g.seed);
    } else if (use_greedy) {
      r = max_free_greedy(host, f, parse_order_policy(policy), g.seed);
    } else {
      r = min_deletion_exact(host, f, exact_options(g));
    }
    if (g.format == "json") emit(g, report_json(r));
    else if (g.format == "csv") emit(g, report_csv(r));
    else emit(g, io::solve_report_text(r));
    std::cerr << "time " << wall(r.wall_time) << "\n";
  });

  // rho-bound
  auto* rho = app.add_subcommand("rho-bound", "certified upper bounds on rho from a witness family");
  std::string witness_family, indices = "2..6";
  std::vector<std::string> witness_params;
  rho->add_option("--family", witness_family, "B, M, Hd, P or Hstair")->required();
  rho->add_option("--params", witness_params, "family parameters, e.g. a=2");
  rho->add_option("--pattern", pattern_ref, "graph file or family spec")->required();
  rho->add_option("--indices", indices, "e.g. 2..6")->capture_default_str();
  rho->callback([&] {
    const auto f = load_graph(pattern_ref);
    const auto w = io::make_witness(witness_family, witness_params, exact_options(g));
    const auto idx = io::parse_indices(indices);
    emit(g, witness_table(rho_upper_from_witness(w.family, f, idx, w.options), g.format));
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "bracket for rho(F) with exact fractions");
  bounds->add_option("--pattern", pattern_ref, "graph file or family spec")->required();
  bounds->add_option("--witness", witness_family, "optional witness family");
  bounds->add_option("--params", witness_params, "witness parameters (B defaults to a=2)");
  bounds->add_option("--indices", indices, "witness indices")->capture_default_str();
  bounds->callback([&] {
    const auto f = load_graph(pattern_ref);
    std::optional<WitnessSpec> w;
    if (!witness_family.empty()) {
      auto p = witness_params;
      if (p.empty() && (witness_family == "B" || witness_family == "b")) p = {"2"};
      w = io::make_witness(witness_family, p, exact_options(g));
      w->indices = io::parse_indices(indices);
    }
    emit(g, bounds_text(f, bounds_report(f, pattern_ref, w), g.format));
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string target;
  verify::VerifyOptions vo;
  verify_cmd->add_option("target", target, "suite id or 'all'")
      ->required()
      ->check(CLI::IsMember([] {
        auto ids = verify::suite_ids();
        ids.push_back("all");
        return ids;
      }()));
  verify_cmd->add_option("--d", vo.gd_d, "levels of G_d")->capture_default_str();
  verify_cmd->add_option("--n", vo.gd_n, "base edge count of G_d")->capture_default_str();
  verify_cmd->add_option("--eps", vo.eps)->capture_default_str();
  verify_cmd->add_option("--seeds", vo.claim_seeds, "greedy subgraphs per level")
      ->capture_default_str();
  verify_cmd->add_option("--trials", vo.interval_trials, "covered-set trials")
      ->capture_default_str();
  verify_cmd->add_option("--qr-n", vo.qr_n, "edge count for the quasi-random suites")
      ->capture_default_str();
  verify_cmd->add_option("--ells", vo.ells, "path lengths for B_{a,al+1}")->capture_default_str();
  verify_cmd->add_option("--hd-max", vo.hd_exact_max, "largest d solved exactly on H_d")
      ->capture_default_str();
  verify_cmd->add_option("--mj-k", vo.mj_k_max, "largest k for M_k hosts")->capture_default_str();
  verify_cmd->callback([&] {
    vo.seed = g.seed;
    vo.node_budget = g.budget_nodes;
    vo.resample_budget = g.budget_resample;
    std::vector<std::string> ids =
        target == "all" ? verify::suite_ids() : std::vector<std::string>{target};
    std::string out;
    const verify::CheckResult* failure = nullptr;
    std::vector<verify::SuiteResult> results;
    results.reserve(ids.size());
    for (const auto& id : ids) {
      results.push_back(verify::run_suite(id, vo));
      const auto& r = results.back();
      out += verify::format_suite(r);
      for (const auto& c : r.checks) std::cerr << wall(c.seconds) << "  " << r.id << " | " << c.name << "\n";
      if (failure == nullptr) failure = r.first_failure();
    }
    if (failure != nullptr) {
      out += "FAIL overall\n";
      if (!failure->counterexample.empty()) {
        out += "# first counterexample (" + failure->name + ")\n" + failure->counterexample;
      }
      code = 1;
    } else {
      out += "PASS overall\n";
    }
    emit(g, out);
  });

  // report
  auto* report = app.add_subcommand("report", "CSV table of invariants and rho brackets");
  std::vector<std::string> patterns;
  report->add_option("patterns", patterns, "family specs, e.g. Q:2,2 M:3");
  report->add_option("--witness", witness_family, "optional witness family for every row");
  report->add_option("--params", witness_params, "witness parameters (B defaults to a=2)");
  report->add_option("--indices", indices, "witness indices")->capture_default_str();
  report->callback([&] {
    std::string out = io::bounds_csv_header();
    for (const auto& p : patterns) {
      const auto f = load_graph(p);
      std::optional<WitnessSpec> w;
      if (!witness_family.empty()) {
        auto wp = witness_params;
        if (wp.empty() && (witness_family == "B" || witness_family == "b")) wp = {"2"};
        w = io::make_witness(witness_family, wp, exact_options(g));
        w->indices = io::parse_indices(indices);
      }
      out += io::bounds_csv_row(f, bounds_report(f, p, w));
    }
    emit(g, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ResampleBudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return code;
}
