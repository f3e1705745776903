#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "brute_force.hpp"
#include "ordturan/catalog.hpp"
#include "ordturan/claim.hpp"
#include "ordturan/densities.hpp"
#include "ordturan/embedding.hpp"
#include "ordturan/io.hpp"
#include "ordturan/quasirandom.hpp"
#include "ordturan/random.hpp"
#include "ordturan/solver.hpp"

namespace ordturan::verify {
namespace {

using Clock = std::chrono::steady_clock;

class Suite {
 public:
  Suite(std::string id, Coverage* coverage) : coverage_(coverage) { result_.id = std::move(id); }

  void use(std::initializer_list<const char*> ops) {
    if (coverage_ == nullptr) return;
    for (auto op : ops) coverage_->use(op);
  }

  // `body` fills detail/counterexample and returns pass/fail; exceptions fail the check.
  void run(const std::string& name, const std::function<bool(CheckResult&)>& body) {
    CheckResult c;
    c.name = name;
    const auto start = Clock::now();
    try {
      c.passed = body(c);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    result_.checks.push_back(std::move(c));
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
  Coverage* coverage_;
};

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

ExactOptions exact_options(const VerifyOptions& o) {
  ExactOptions e;
  e.node_budget = o.node_budget;
  return e;
}

QuasirandomOptions qr_options(const VerifyOptions& o) {
  QuasirandomOptions q;
  q.resample_budget = o.resample_budget;
  return q;
}

// Uniform random point of (lo, hi).
double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.open01(); }

// Union of `parts` disjoint open intervals inside (lo, hi).
IntervalUnion random_union(Rng& rng, double lo, double hi, int parts) {
  std::vector<double> cuts(2 * parts);
  for (auto& c : cuts) c = uniform(rng, lo, hi);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Interval> pieces;
  for (int i = 0; i < parts; ++i) pieces.push_back(Interval::open(cuts[2 * i], cuts[2 * i + 1]));
  return IntervalUnion(std::move(pieces));
}

double deviation(const PointMatching& g, const IntervalUnion& i, const IntervalUnion& j) {
  const double expected = i.total_length() * j.total_length() * static_cast<double>(g.size());
  return std::abs(static_cast<double>(count_edges_between(g, i, j)) - expected);
}

SuiteResult thm1_1(const VerifyOptions& o, Coverage* cov) {
  Suite s("thm1.1", cov);
  s.use({"build_Q", "build_B", "chi_interval", "vec_pi", "pi_unordered", "rho_lower_ell",
         "ell_monotone", "min_deletion_exact", "bipartite_half", "contains",
         "rho_upper_from_witness", "bounds_report"});
  for (auto [a, b] : o.q_params) {
    const auto q = catalog::build_Q(a, b);
    const std::string qname = "Q(" + str(a) + "," + str(b) + ")";
    s.run(qname + " chi_< = a+b+1", [&](CheckResult& c) {
      c.detail = "chi_< = " + str(chi_interval(q));
      return chi_interval(q) == a + b + 1;
    });
    s.run(qname + " vec_pi = (a+b-1)/(a+b)", [&](CheckResult& c) {
      const auto v = vec_pi(q);
      c.detail = "vec_pi = " + to_string(v) + ", pi = " + to_string(pi_unordered(q)) +
                 ", ell bound = " + to_string(rho_lower_ell(q));
      return v == Rational(a + b - 1, a + b) && pi_unordered(q) <= v && rho_lower_ell(q) <= v;
    });
    for (int ell : o.ells) {
      const int n = a * ell + 1;
      const auto host = catalog::build_B(a, n);
      const std::string name = qname + " in B(" + str(a) + "," + str(n) + ")";
      s.run(name + " e = (a+1)l, ell = n", [&](CheckResult& c) {
        c.detail = "e = " + str(host.edge_count()) + ", ell = " + str(ell_monotone(host));
        return host.edge_count() == static_cast<std::size_t>((a + 1) * ell) &&
               ell_monotone(host) == n;
      });
      s.run(name + " exact deletion >= l-1, matches oracle, ratio bound",
            [&](CheckResult& c) {
              const auto r = min_deletion_exact(host, q, exact_options(o));
              const auto del = r.deleted_indices.size();
              c.detail = "deletions = " + str(del) + " (" + to_string(r.status) + ", " +
                         std::to_string(r.nodes_explored) + " nodes)";
              c.counterexample = io::graph_to_json(host);
              if (r.status != SolveStatus::ProvedOptimal) return false;
              bool ok = b > a || del >= static_cast<std::size_t>(ell - 1);
              if (host.edge_count() <= 24) {
                const auto oracle = oracle::min_deletion(host, q);
                c.detail += ", oracle = " + str(oracle.size);
                ok = ok && oracle.size == del && oracle.lex_smallest == r.deleted_indices;
              }
              const Rational ratio(static_cast<std::int64_t>(r.optimum),
                                   static_cast<std::int64_t>(host.edge_count()));
              const Rational cap = Rational(a, a + 1) + Rational(1, (a + 1) * ell);
              c.detail += ", ratio = " + to_string(ratio) + " <= " + to_string(cap);
              return ok && ratio <= cap;
            });
      if (a % 2 == 0) {
        s.run(name + " bipartite half is Q-free", [&](CheckResult& c) {
          const auto r = bipartite_half(host, o.seed);
          const auto kept = host.without_edges(r.deleted_indices);
          c.detail = "kept " + str(r.optimum) + " of " + str(host.edge_count());
          return 2 * r.optimum >= host.edge_count() && !contains(kept, q);
        });
      }
    }
    if (a % 2 == 0 && b >= 2 && !o.ells.empty()) {
      s.run(qname + " bracket [1/2, a/(a+1)] strictly inside vec_pi/2 .. vec_pi",
            [&](CheckResult& c) {
              auto w = io::make_witness("B", {std::to_string(a)}, exact_options(o));
              w.indices = o.ells;
              const auto br = bounds_report(q, qname, w);
              const int ell_max = *std::max_element(o.ells.begin(), o.ells.end());
              const Rational cap = Rational(a, a + 1) + Rational(1, (a + 1) * ell_max);
              c.detail = "rho in [" + to_string(br.rho_lower) + ", " + to_string(br.rho_upper) +
                         "] (" + br.upper_provenance + ")";
              return br.valid && br.rho_lower >= Rational(1, 2) && br.rho_upper <= cap &&
                     br.vec_pi / 2 < Rational(1, 2) && Rational(a, a + 1) < br.vec_pi;
            });
    }
  }
  return s.take();
}

SuiteResult thm1_2(const VerifyOptions& o, Coverage* cov) {
  Suite s("thm1.2", cov);
  s.use({"build_H_d", "build_pattern", "contains", "min_deletion_exact", "max_free_greedy",
         "rho_upper_from_witness"});
  const auto m = catalog::matching_16_23_45();
  s.run("e(H_d) = d 2^(d-1), |V| from recursion, d <= " + str(o.hd_count_max),
        [&](CheckResult& c) {
          int vertices = 0;
          for (int d = 1; d <= o.hd_count_max; ++d) {
            const auto h = catalog::build_H_d(d);
            vertices = d == 1 ? 2 : 2 * vertices + (1 << d);
            if (h.edge_count() != static_cast<std::size_t>(d) << (d - 1) || h.n() != vertices) {
              c.detail = "d = " + str(d) + ": e = " + str(h.edge_count()) + ", n = " + str(h.n());
              return false;
            }
          }
          c.detail = "ok";
          return true;
        });
  s.run("H_3 edge list", [&](CheckResult& c) {
    const std::vector<std::pair<int, int>> fig{{1, 24}, {2, 23}, {3, 22}, {4, 21},
                                               {5, 12}, {6, 11}, {7, 8},  {9, 10},
                                               {13, 20}, {14, 19}, {15, 16}, {17, 18}};
    const auto h = catalog::build_H_d(3);
    c.detail = io::graph_to_json(h);
    c.detail.pop_back();
    return h == catalog::build_pattern(fig, 24) && contains(h, m);
  });
  for (int d = 1; d <= o.hd_exact_max; ++d) {
    s.run("max M-free subgraph of H_" + str(d) + " <= 2^d, matches oracle", [&, d](CheckResult& c) {
      const auto h = catalog::build_H_d(d);
      const auto r = min_deletion_exact(h, m, exact_options(o));
      c.detail = "max free = " + str(r.optimum) + " (" + to_string(r.status) + ")";
      c.counterexample = io::graph_to_json(h);
      bool ok = r.status == SolveStatus::ProvedOptimal && r.optimum <= (std::size_t{1} << d);
      if (h.edge_count() <= 24) {
        const auto oracle = oracle::max_free(h, m);
        c.detail += ", oracle = " + str(oracle);
        ok = ok && oracle == r.optimum;
      }
      return ok;
    });
  }
  if (o.hd_bound_d > 0) {
    const int d = o.hd_bound_d;
    s.run("H_" + str(d) + " greedy M-free subgraphs <= 2^d", [&](CheckResult& c) {
      const auto h = catalog::build_H_d(d);
      std::size_t best = 0;
      for (std::uint64_t k = 0; k < 20; ++k) {
        best = std::max(best, max_free_greedy(h, m, OrderPolicy::Random, mix_seed(o.seed, k)).optimum);
      }
      best = std::max(best, max_free_greedy(h, m, OrderPolicy::Given).optimum);
      best = std::max(best, max_free_greedy(h, m, OrderPolicy::LowDegreeFirst).optimum);
      c.detail = "best greedy = " + str(best) + " of " + str(h.edge_count());
      return best <= (std::size_t{1} << d);
    });
  }
  s.run("witness ratios over H_d <= 2/d", [&](CheckResult& c) {
    std::vector<int> idx;
    for (int d = 1; d <= o.hd_exact_max; ++d) idx.push_back(d);
    const auto ratios = rho_upper_from_witness(
        [](int d) { return catalog::build_H_d(d); }, m, idx, exact_options(o));
    bool ok = true;
    for (const auto& w : ratios) {
      c.detail += (c.detail.empty() ? "" : ", ") + ("d=" + str(w.index) + ": " + to_string(w.ratio));
      ok = ok && w.certified && w.ratio <= Rational(2, w.index);
    }
    return ok;
  });
  return s.take();
}

SuiteResult prop_mj(const VerifyOptions& o, Coverage* cov) {
  Suite s("prop-mj", cov);
  s.use({"build_M", "build_pattern", "chi_interval", "vec_pi", "ell_monotone",
         "min_deletion_exact", "max_free_greedy", "enumerate_embeddings",
         "rho_upper_from_witness", "blowup", "plus_I", "contains", "build_P", "build_H_stair",
         "chromatic_number", "has_odd_cycle"});
  s.run("chi_<(M_j) = j+1, vec_pi = (j-1)/j, ell = 2 for j <= " + str(o.chi_mj_max),
        [&](CheckResult& c) {
          for (int j = 1; j <= o.chi_mj_max; ++j) {
            const auto mj = catalog::build_M(j);
            std::vector<std::pair<int, int>> list;
            for (int i = 1; i <= j; ++i) list.emplace_back(2 * i - 1, 2 * i);
            if (chi_interval(mj) != j + 1 || vec_pi(mj) != Rational(j - 1, j) ||
                ell_monotone(mj) != 2 || !(mj == catalog::build_pattern(list)) ||
                chromatic_number(mj) != 2) {
              c.detail = "fails at j = " + str(j);
              return false;
            }
          }
          c.detail = "ok";
          return true;
        });
  for (int j : o.mj_js) {
    const auto mj = catalog::build_M(j);
    s.run("max M_" + str(j) + "-free subgraph of M_k is j-1, k <= " + str(o.mj_k_max),
          [&, j](CheckResult& c) {
            for (int k = j; k <= o.mj_k_max; ++k) {
              const auto mk = catalog::build_M(k);
              const auto r = min_deletion_exact(mk, mj, exact_options(o));
              const auto greedy = max_free_greedy(mk, mj);
              // any j edges of M_k form a copy: C(k, j) embeddings
              std::size_t choose = 1;
              for (int i = 0; i < j; ++i) choose = choose * (k - i) / (i + 1);
              const auto copies = enumerate_embeddings(mk, mj).size();
              const auto expected = static_cast<std::size_t>(j - 1);
              if (r.status != SolveStatus::ProvedOptimal || r.optimum != expected ||
                  greedy.optimum != expected || copies != choose ||
                  oracle::max_free(mk, mj) != expected) {
                c.detail = "k = " + str(k) + ": exact " + str(r.optimum) + ", greedy " +
                           str(greedy.optimum) + ", copies " + str(copies);
                c.counterexample = io::graph_to_json(mk);
                return false;
              }
            }
            c.detail = "ok";
            return true;
          });
    s.run("ratio (j-1)/k strictly decreasing, j = " + str(j), [&, j](CheckResult& c) {
      std::vector<int> idx;
      for (int k = j; k <= o.mj_k_max; ++k) idx.push_back(k);
      const auto ratios = rho_upper_from_witness(
          [](int k) { return catalog::build_M(k); }, mj, idx, exact_options(o));
      bool ok = true;
      for (std::size_t i = 0; i < ratios.size(); ++i) {
        const auto& w = ratios[i];
        ok = ok && w.certified && w.ratio == Rational(j - 1, w.index);
        if (i > 0) ok = ok && w.ratio < ratios[i - 1].ratio;
      }
      c.detail = "last ratio " + to_string(ratios.back().ratio);
      return ok;
    });
  }
  s.run("F +_I F inside the blow-up when each pair {2i-1,2i} meets I once",
        [&](CheckResult& c) {
          const std::vector<OrderedGraph> patterns{catalog::build_M(2), catalog::build_P(3),
                                                   catalog::build_Q(2, 1)};
          std::size_t tried = 0;
          for (const auto& f : patterns) {
            const int n = f.n();
            for (std::uint32_t bits = 0; bits < (1U << n); ++bits) {
              std::vector<Vertex> in;
              for (int i = 1; i <= n; ++i) in.push_back(2 * i - static_cast<int>((bits >> (i - 1)) & 1U));
              const auto sum = plus_I(f, in);
              ++tried;
              if (!contains(blowup(f, 2), sum) || !contains(sum, f)) {
                c.counterexample = io::graph_to_json(sum);
                return false;
              }
            }
            std::vector<Vertex> front;
            for (int i = 1; i <= n; ++i) front.push_back(i);
            if (!contains(plus_I(f, front), f)) return false;
          }
          c.detail = str(tried) + " placements";
          return true;
        });
  s.run("ell(H_stair(t)) = 2 for t <= 10; H_stair(4) = {12,14,34}", [&](CheckResult& c) {
    for (int t = 2; t <= 10; ++t) {
      if (ell_monotone(catalog::build_H_stair(t)) != 2) {
        c.detail = "t = " + str(t);
        return false;
      }
    }
    const std::vector<std::pair<int, int>> four{{1, 2}, {1, 4}, {3, 4}};
    c.detail = "ok";
    return catalog::build_H_stair(4) == catalog::build_pattern(four) &&
           !has_odd_cycle(catalog::build_H_stair(10));
  });
  return s.take();
}

SuiteResult lemma_intervals(const VerifyOptions& o, Coverage* cov) {
  Suite s("lemma-intervals", cov);
  s.use({"build_G_d", "covered_set", "gen_quasirandom", "certify_quasirandom"});
  s.run("covered set of subgraphs of G_" + str(o.gd_d) + " has <= 2^d - 1 intervals, " +
            str(o.interval_trials) + " trials",
        [&](CheckResult& c) {
          const auto g = build_G_d(o.gd_d, o.gd_n, o.eps, o.seed, qr_options(o));
          const std::size_t cap = (std::size_t{1} << o.gd_d) - 1;
          Rng rng(mix_seed(o.seed, 7));
          std::vector<std::size_t> order(g.size());
          std::size_t worst = 0;
          for (int trial = 0; trial < o.interval_trials; ++trial) {
            for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
            rng.shuffle(std::span<std::size_t>(order));
            // sizes spread over 1..e so sparse subgraphs are well represented
            const auto size = 1 + rng.below(trial % 2 == 0 ? 16 : g.size());
            std::vector<std::size_t> pick(order.begin(), order.begin() + static_cast<long>(size));
            std::sort(pick.begin(), pick.end());
            const auto count = covered_set(g.subset(pick)).count();
            worst = std::max(worst, count);
            if (count > cap) {
              c.detail = "trial " + str(trial) + ": " + str(count) + " intervals";
              c.counterexample = io::matching_to_text(g.subset(pick), {"subgraph", o.gd_d, o.gd_n, o.eps, o.seed, ""});
              return false;
            }
          }
          c.detail = "max intervals " + str(worst) + " <= " + str(cap);
          return true;
        });
  return s.take();
}

SuiteResult prop3_1(const VerifyOptions& o, Coverage* cov) {
  Suite s("prop3.1", cov);
  s.use({"gen_quasirandom", "certify_quasirandom", "count_edges_between"});
  for (int k = 0; k < o.qr_seeds; ++k) {
    const std::uint64_t seed = o.seed + static_cast<std::uint64_t>(k);
    s.run("G(" + str(o.qr_n) + ", " + io::format_real(o.eps) + ") seed " + std::to_string(seed) +
              ": certified, " + str(o.continuous_pairs) + " continuous pairs within eps n",
          [&](CheckResult& c) {
            const auto draw = generate_quasirandom(o.qr_n, o.eps, seed, qr_options(o));
            const auto& g = draw.graph;
            const auto again = certify_quasirandom(g, o.eps);
            const auto full = count_edges_between(g, IntervalUnion::of({Interval::open(0, 1)}),
                                                  IntervalUnion::of({Interval::open(1, 2)}));
            Rng rng(mix_seed(seed, 31));
            double worst = 0.0;
            for (int p = 0; p < o.continuous_pairs; ++p) {
              worst = std::max(worst, deviation(g, random_union(rng, 0, 1, 1), random_union(rng, 1, 2, 1)));
            }
            const double tol = o.eps * static_cast<double>(o.qr_n);
            c.detail = to_string(draw.sampler) + " sampler, " + str(draw.attempts) +
                       " attempt(s), grid deviation " + io::format_real(again.max_deviation) +
                       " <= " + io::format_real(again.tolerance) + ", continuous " +
                       io::format_real(worst) + " <= " + io::format_real(tol);
            return draw.certificate.passed && again.passed && g.size() == o.qr_n &&
                   full == o.qr_n && worst <= tol;
          });
  }
  return s.take();
}

SuiteResult prop3_2(const VerifyOptions& o, Coverage* cov) {
  Suite s("prop3.2", cov);
  s.use({"gen_quasirandom", "count_edges_between"});
  s.run(str(o.union_pairs) + " unions of a, b <= " + str(o.union_max_parts) +
            " intervals within a b eps n",
        [&](CheckResult& c) {
          const auto g = gen_quasirandom(o.qr_n, o.eps, o.seed, qr_options(o));
          Rng rng(mix_seed(o.seed, 32));
          double worst_ratio = 0.0;
          for (int p = 0; p < o.union_pairs; ++p) {
            const int a = 1 + static_cast<int>(rng.below(o.union_max_parts));
            const int b = 1 + static_cast<int>(rng.below(o.union_max_parts));
            const auto i = random_union(rng, 0, 1, a);
            const auto j = random_union(rng, 1, 2, b);
            const double tol = a * b * o.eps * static_cast<double>(g.size());
            const double dev = deviation(g, i, j);
            worst_ratio = std::max(worst_ratio, dev / tol);
            if (dev > tol) {
              c.detail = "pair " + str(p) + ": deviation " + io::format_real(dev);
              return false;
            }
          }
          c.detail = "worst deviation / (a b eps n) = " + io::format_real(worst_ratio);
          return true;
        });
  return s.take();
}

// Greedy M'-free subgraphs of G_d for d <= gd_d and the claim checks on them.
SuiteResult claim_suite(const std::string& id, bool claim, bool display, const VerifyOptions& o,
                        Coverage* cov) {
  Suite s(id, cov);
  s.use({"build_G_d", "to_ordered_graph", "max_free_greedy", "check_claim", "f_d",
         "covered_set", "endpoints_left", "endpoints_right", "interval_hull", "contains",
         "matching_13_25_46"});
  for (int d = 1; d <= o.gd_d; ++d) {
    std::string name = "d = " + str(d) + ", " + str(o.claim_seeds) + " greedy M'-free subgraphs";
    if (claim) name += ": claim bound";
    if (display) name += (claim ? " and " : ": ") + std::string("e(H) <= (2/d + 10^d eps/(d 2^(d-1))) e(G_d)");
    s.run(name, [&, d](CheckResult& c) {
      double min_slack = INFINITY;
      std::size_t max_edges = 0;
      std::size_t e_g = 0;
      for (int k = 0; k < o.claim_seeds; ++k) {
        const auto seed = mix_seed(o.seed, 1000 + static_cast<std::uint64_t>(k));
        const auto g = build_G_d(d, o.gd_n, o.eps, seed, qr_options(o));
        e_g = g.size();
        const auto h = greedy_free_subgraph(g, seed);
        max_edges = std::max(max_edges, h.size());
        const auto r = check_claim(h, g, d, o.gd_n, o.eps);
        const double cap = (2.0 / d + std::pow(10.0, d) * o.eps / (d * std::ldexp(1.0, d - 1))) *
                           static_cast<double>(g.size());
        const bool intervals_ok = covered_set(h).count() <= (std::size_t{1} << d) - 1;
        bool ok = intervals_ok;
        if (claim) {
          ok = ok && r.holds && r.parts.no_cover_to_cover && r.parts.crossing_edges_placed &&
               r.parts.lengths_fit;
        }
        if (display) ok = ok && static_cast<double>(h.size()) <= cap;
        min_slack = std::min(min_slack, r.slack);
        if (!ok) {
          c.detail = "seed " + std::to_string(seed) + ": e(H) = " + str(h.size()) +
                     ", bound " + io::format_real(r.bound) + ", cover-to-cover " +
                     (r.parts.no_cover_to_cover ? "none" : "present") + ", lengths " +
                     (r.parts.lengths_fit ? "fit" : "exceed");
          c.counterexample = io::matching_to_text(h, {"subgraph", d, o.gd_n, o.eps, seed, ""});
          return false;
        }
      }
      c.detail = "e(G_d) = " + str(e_g) + ", max e(H) = " + str(max_edges) +
                 ", min claim slack " + io::format_real(min_slack);
      return true;
    });
  }
  if (display) {
    s.run("ordered matching contains M' iff the point matching does (300 small instances)",
          [&](CheckResult& c) {
            Rng rng(mix_seed(o.seed, 33));
            const auto mp = catalog::matching_13_25_46();
            std::size_t positives = 0;
            for (int trial = 0; trial < 300; ++trial) {
              const int m = 1 + static_cast<int>(rng.below(7));
              std::vector<PointEdge> edges;
              for (int i = 0; i < m; ++i) {
                double x = 2 * rng.open01(), y = 2 * rng.open01();
                if (x > y) std::swap(x, y);
                if (x == y) continue;
                edges.push_back({x, y, 0, 0});
              }
              const PointMatching g(edges);
              const bool geometric = oracle::contains_13_25_46(g);
              positives += geometric ? 1 : 0;
              if (contains(to_ordered_graph(g), mp) != geometric) {
                c.counterexample = io::matching_to_text(g, {});
                return false;
              }
            }
            c.detail = str(positives) + " instances contain M'";
            return true;
          });
  }
  return s.take();
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double SuiteResult::seconds() const {
  double t = 0.0;
  for (const auto& c : checks) t += c.seconds;
  return t;
}

const CheckResult* SuiteResult::first_failure() const {
  for (const auto& c : checks) {
    if (!c.passed) return &c;
  }
  return nullptr;
}

const std::vector<std::string>& library_ops() {
  static const std::vector<std::string> ops{
      "chi_interval", "ell_monotone", "enumerate_embeddings", "contains", "blowup", "plus_I",
      "chromatic_number", "has_odd_cycle", "build_P", "build_Q", "build_B", "build_M",
      "build_pattern", "build_H_d", "build_H_stair", "matching_13_25_46", "gen_quasirandom",
      "certify_quasirandom", "count_edges_between", "build_G_d", "covered_set",
      "endpoints_left", "endpoints_right", "interval_hull", "f_d", "check_claim",
      "to_ordered_graph", "min_deletion_exact", "max_free_greedy", "bipartite_half",
      "rho_upper_from_witness", "vec_pi", "pi_unordered", "rho_lower_ell", "bounds_report"};
  return ops;
}

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"thm1.1", "thm1.2", "thm1.3", "prop-mj",
                                            "lemma-intervals", "prop3.1", "prop3.2",
                                            "claim-thm1.4"};
  return ids;
}

SuiteResult run_suite(const std::string& id, const VerifyOptions& o, Coverage* cov) {
  if (id == "thm1.1") return thm1_1(o, cov);
  if (id == "thm1.2") return thm1_2(o, cov);
  if (id == "thm1.3") return claim_suite(id, false, true, o, cov);
  if (id == "prop-mj") return prop_mj(o, cov);
  if (id == "lemma-intervals") return lemma_intervals(o, cov);
  if (id == "prop3.1") return prop3_1(o, cov);
  if (id == "prop3.2") return prop3_2(o, cov);
  if (id == "claim-thm1.4") return claim_suite(id, true, false, o, cov);
  throw std::invalid_argument("unknown verify target '" + id + "'");
}

SuiteResult formulas(int a_max, int j_max, Coverage* cov) {
  Suite s("formulas", cov);
  s.use({"build_Q", "build_M", "chi_interval", "vec_pi"});
  s.run("chi_<(Q_{a,b}) = a+b+1 and vec_pi = (a+b-1)/(a+b), 1 <= b <= a <= " + str(a_max),
        [&](CheckResult& c) {
          int count = 0;
          for (int a = 2; a <= a_max; ++a) {
            for (int b = 1; b <= a; ++b) {
              const auto q = catalog::build_Q(a, b);
              ++count;
              if (chi_interval(q) != a + b + 1 || vec_pi(q) != Rational(a + b - 1, a + b)) {
                c.detail = "fails at (" + str(a) + "," + str(b) + ")";
                return false;
              }
            }
          }
          c.detail = str(count) + " pairs";
          return true;
        });
  s.run("chi_<(M_j) = j+1, j <= " + str(j_max), [&](CheckResult& c) {
    for (int j = 1; j <= j_max; ++j) {
      if (chi_interval(catalog::build_M(j)) != j + 1) {
        c.detail = "fails at j = " + str(j);
        return false;
      }
    }
    c.detail = "ok";
    return true;
  });
  return s.take();
}

std::string format_suite(const SuiteResult& r) {
  std::ostringstream out;
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << r.id << " | " << c.name << ": " << c.detail << "\n";
  }
  out << (r.passed() ? "PASS " : "FAIL ") << r.id << " (" << r.checks.size() << " checks)\n";
  return out.str();
}

}  // namespace ordturan::verify
