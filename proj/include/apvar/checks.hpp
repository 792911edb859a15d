#pragma once

// Verification suites shared by the CLI `verify` command and the tests.

#include <string>
#include <vector>

#include "apvar/common.hpp"
#include "apvar/progression.hpp"

namespace apvar {

struct CheckResult {
  std::string check;
  double lhs = 0;
  double rhs = 0;
  double rel_diff = 0;
  bool pass = false;
};

struct SuiteOptions {
  u64 x = 10000;
  unsigned k = 2;
  u64 Q = 100;
  u64 gamma = 300;
  double budget = kDefaultWorkBudget;
};

inline constexpr double kIdentityTolerance = 1e-9;
inline constexpr double kReconstructionTolerance = 1e-10;
inline constexpr double kDirichletTolerance = 1e-3;
inline constexpr double kGrowthSlopeLow = 0.85;
inline constexpr double kGrowthSlopeHigh = 1.2;

// Exact arithmetic identities plus floating identities at x, k.
std::vector<CheckResult> identities_suite(const SuiteOptions& opt);
// Brute-force Dirichlet partial sums against zeta(2)^k times the correction.
std::vector<CheckResult> dirichlet_suite(const SuiteOptions& opt);
std::vector<CheckResult> farey_suite(const SuiteOptions& opt);
std::vector<CheckResult> growth_suite(const SuiteOptions& opt);

// suite in {identities, dirichlet, farey, growth, all}; DomainError otherwise.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opt);

bool all_pass(const std::vector<CheckResult>& results);

// Worst relative difference over a family of (lhs, rhs) pairs.
CheckResult worst_of(const std::string& name, const std::vector<IdentityPair>& pairs, double tol);

// Individual checks reused by the acceptance runner.
CheckResult ramanujan_orthogonality_check(u64 q_max);
CheckResult divisor_dft_check(u64 q_max);
CheckResult reconstruction_check(u64 q_max, unsigned k_max);
CheckResult class_sum_check(u64 q_max, unsigned k_max);
CheckResult f_star_parseval_check(u64 q_max, unsigned k, double X);
CheckResult dirichlet_check(u64 q_max, unsigned k_max, u64 N);
CheckResult farey_containment_check(u64 gamma_max);
CheckResult farey_length_check(u64 gamma_max);

}  // namespace apvar
