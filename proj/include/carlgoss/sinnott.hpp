#pragma once

#include "carlgoss/lfunction.hpp"
#include "carlgoss/theta.hpp"

namespace carlgoss {

// How many base-p digits of y a level-n evaluation can see: the least m with
// p^m >= n + 1, since kappa(gamma)^y mod pi^{n+1} only depends on y mod p^m.
int sinnott_digits(const PrimeCtx* P, int n);

// A function of the p-adic exponent recorded by its values on a full digit
// window: table[y] at precision n + 1 for y = 0..p^m - 1.
struct DirFunction {
  int n = 0;
  int m = 0;
  std::vector<PadicElem> table;
};

// sum c_gamma [gamma]  |->  (y -> sum Teich(c_gamma) kappa(gamma)^y). The
// coefficient lift is the Teichmuller section of the residue field, a ring
// map here, so the whole map is additive.
DirFunction sinnott_map(const GroupRingElem& lam);

bool dirfunction_zero(const DirFunction& f);

// A nonzero element killed by the map above; exists at every level n >= 1.
// Support: the one-units 1 + a pi^n for the first three scalar residues a,
// with coefficients solving sum x = 0 and sum x a = 0.
GroupRingElem kernel_witness(Tower& tw, int n);

struct StickLfunReport {
  bool ok = false;
  long long cases = 0;
  long long mismatches = 0;
};

// Coefficient-by-coefficient comparison, for every y mod p^m and k <= D, of
// the mapped level-n Stickelberger series at character index -i with the
// exact L-series at (i, -y). Everything lives mod pi^{n+1}; the match is
// exact, no weakening.
StickLfunReport stick_lfun_check(Tower& tw, long long i, int n, int D = -1);

}  // namespace carlgoss
