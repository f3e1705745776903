#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ordturan::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::string counterexample;  // serialized witness of a failure, if any
  double seconds = 0.0;
};

struct SuiteResult {
  std::string id;
  std::vector<CheckResult> checks;
  bool passed() const;
  double seconds() const;
  const CheckResult* first_failure() const;
};

/// Records which library operations a run touched.
class Coverage {
 public:
  void use(const std::string& op) { ops_.insert(op); }
  const std::set<std::string>& ops() const { return ops_; }

 private:
  std::set<std::string> ops_;
};

/// Public library operations the harness is expected to exercise.
const std::vector<std::string>& library_ops();

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::uint64_t node_budget = 10'000'000;
  int resample_budget = 100;

  std::vector<std::pair<int, int>> q_params{{2, 1}, {2, 2}, {3, 2}};
  std::vector<int> ells{2, 3, 4};

  int hd_exact_max = 3;
  int hd_bound_d = 4;
  int hd_count_max = 8;

  std::vector<int> mj_js{2, 3};
  int mj_k_max = 8;
  int chi_mj_max = 6;

  int gd_d = 3;
  std::size_t gd_n = 200;
  double eps = 0.2;
  int interval_trials = 1000;
  int claim_seeds = 50;

  std::size_t qr_n = 50'000;
  int qr_seeds = 3;
  int continuous_pairs = 1000;
  int union_pairs = 200;
  int union_max_parts = 4;
};

const std::vector<std::string>& suite_ids();

/// Throws std::invalid_argument for an unknown id.
SuiteResult run_suite(const std::string& id, const VerifyOptions& options,
                      Coverage* coverage = nullptr);

/// Interval chromatic and density formulas for Q_{a,b} (2 <= a <= a_max,
/// 1 <= b <= a) and M_j (j <= j_max).
SuiteResult formulas(int a_max, int j_max, Coverage* coverage = nullptr);

/// One line per check, "PASS name: detail" / "FAIL name: detail".
std::string format_suite(const SuiteResult& r);

}  // namespace ordturan::verify
