#pragma once

#include <string>
#include <vector>

namespace carlgoss {

struct CaseResult {
  std::string name;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  long long cases = 0;
  long long failed = 0;
  std::vector<CaseResult> failures;

  void merge(const SuiteResult& o);
};

// Fixed verification batteries over the desk configurations (q = 3 with the
// primes t and t^2 + 1, plus q = 5 where a second field matters). Each
// runner is deterministic for any thread count.
SuiteResult crit_forced_power_sums(int threads);  // S_n(j) = 0 below q^n - 1
SuiteResult crit_bernoulli_table(int threads);    // beta: nonzero, congruence, degree
SuiteResult crit_forced_zeros(int threads);       // Z(1, j) = 0 on the forced classes
SuiteResult crit_lfun_zeta(int threads);          // direct L against (1 - pi^j X^d) Z
SuiteResult crit_even_vanishing(int threads);     // L(1, y) = 0 for forced indices
SuiteResult crit_theta_structure(int threads);    // window, tower, division, inverse
SuiteResult crit_sinnott_cross(int threads);      // mapped theta against exact L
SuiteResult crit_kernel(int threads);             // kernel witnesses
SuiteResult crit_m_invariant(int threads);        // certificates and estimates
SuiteResult crit_n_invariant(int threads);        // sharpened tower resolution
SuiteResult crit_zeta_infty(int threads);         // values, block bound, Euler product

std::vector<std::string> suite_names();  // CLI tokens, "all" excluded
SuiteResult run_suite(const std::string& name, int threads);
std::vector<SuiteResult> run_all(int threads);

}  // namespace carlgoss
