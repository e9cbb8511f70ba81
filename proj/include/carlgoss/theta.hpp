#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "carlgoss/groupring.hpp"

namespace carlgoss {

// Shared caches for one prime's Stickelberger tower: group levels, lists of
// auxiliary primes per degree bound, and their Frobenius decompositions per
// level. Accessors are serialized and caches grow append-only; when sharing
// one Tower across threads, touch the largest (n, D) first so later calls
// are pure reads.
class Tower {
 public:
  explicit Tower(const PrimeCtx* P) : P_(P) {}

  Tower(const Tower&) = delete;
  Tower& operator=(const Tower&) = delete;

  const PrimeCtx* ctx() const { return P_; }
  const GammaLevel& level(int n);
  // monic irreducibles != pi of degree <= D, sorted by (degree, lex)
  const std::vector<Poly>& primes_to(int D);
  // Frobenius data aligned with primes_to(D)
  const std::vector<FrobData>& decomposition(int n, int D);

  // default truncation: two coefficients of slack past the degree bound
  static int default_window(const PrimeCtx* P, int n) { return P->d() * (n + 1) + 2; }

 private:
  const PrimeCtx* P_;
  std::mutex mu_;
  std::map<int, std::unique_ptr<GammaLevel>> levels_;
  int primes_deg_ = -1;
  std::vector<Poly> primes_;
  std::map<int, std::vector<FrobData>> decomp_;  // per level, aligned with primes_

  void grow_primes(int D);
};

// Level-n Stickelberger series for the residue character index i, truncated
// at X^D: the product over the auxiliary primes piq of degree g <= D of
// (1 - deltabar^{-i} [gamma^{-1}] X^g)^{-1} in F_{q^d}[Gamma_n][X]/(X^{D+1}).
struct ThetaSeries {
  int n = 0;
  long long i = 0;
  int D = 0;
  std::vector<GroupRingElem> coeff;
};

ThetaSeries theta_series(Tower& tw, int n, long long i, int D);

// For i != 0 the series is a polynomial of X-degree < d(n+1); the window
// [d(n+1), D] acts as the guard that the truncation saw all of it.
bool theta_window_ok(const ThetaSeries& th);

// Value at X = 1 of the sharpened series: the plain value for i with
// (q-1) !| i, and the value of the exact quotient by (1 - X) when (q-1) | i
// (where the plain value vanishes). i == 0 is rejected; a dirty guard window
// or a failed division raises guard_error. D == -1 takes the default window.
GroupRingElem theta_sharp_at_one(Tower& tw, int n, long long i, int D = -1);

struct NInvariant {
  bool found = false;
  int n = -1;
};
// least level n <= n_max where the sharpened value at 1 is nonzero
NInvariant n_invariant(Tower& tw, long long i, int n_max);

// push every coefficient through the reduction Gamma_n -> Gamma_to
ThetaSeries project_theta(Tower& tw, const ThetaSeries& th, int to_level);

}  // namespace carlgoss
