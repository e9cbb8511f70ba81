#pragma once

#include <vector>

#include "carlgoss/laurent.hpp"
#include "carlgoss/padic.hpp"

namespace carlgoss {

// S_n(j) reduced mod pi^M without forming the exact polynomial first.
PadicElem power_sum_mod(const PrimeCtx* P, int n, long long j, int M);

// The positive exponent the exact path works at: the least j >= 1 with
// j == y mod p^m and j == i mod q^d - 1, m minimal with p^m >= M. The two
// moduli are always coprime. Exposed so certificates can cite it.
long long lfunction_crt_exponent(const PrimeCtx* P, long long i, const ZpApprox& y, int M);

// Coefficients of the pi-adic L-series for the residue character index i and
// exponent y, every entry at precision M, trailing zeros trimmed.
//
// Exact path: at the congruent integer exponent j the series collapses to
// the polynomial sum_n (S_n(j) - pi^j S_{n-d}(j)) X^n, which determines all
// coefficients mod pi^M at once.
std::vector<PadicElem> lfunction_exact(const PrimeCtx* P, long long i, const ZpApprox& y,
                                       int M);

// Direct path, independent of the exact one: coefficient n is the sum of
// teich(a)^i * <a>^y over the monic a of degree n prime to pi, for n <= D.
std::vector<PadicElem> lfunction_direct(const PrimeCtx* P, long long i, const ZpApprox& y,
                                        int M, int D, int threads = 1);

struct LSpecial {
  PadicElem value_at_one;
  PadicElem derivative_at_one;  // d/dX at X = 1
};
LSpecial lfunction_special(const PrimeCtx* P, long long i, const ZpApprox& y, int M);
LSpecial lfunction_special_direct(const PrimeCtx* P, long long i, const ZpApprox& y, int M,
                                  int D, int threads = 1);

// Sum of <a>_infty^y over the monic a of degree n, to the given absolute
// precision in 1/t. Needs p^{y.digits()} >= abs_prec.
LaurentElem zeta_infty_block(const Fq* F, int n, const ZpApprox& y, int abs_prec);

// Two-variable zeta at (x, y): sum_n (sum_{deg a = n, a monic} <a>^{-y}) x^n.
// The degree-n block has valuation at least p^{n-1} + n*v(x), so the series
// converges for every nonzero x and the sum is cut once that bound clears
// target for the whole tail.
LaurentElem zeta_infty(const LaurentElem& x, const ZpApprox& y, int target);

struct InterpReport {
  bool ok;
  int certified;  // digits actually compared: min(target, (D+1)*|v(x)|)
};

// The Euler product over the monic irreducibles of degree <= D away from pi,
// evaluated at (x, y) with v(x) < 0 strictly, against
// (1 - <pi>^{-y} x^{-d}) * zeta_infty(x^{-1}, y). Factors beyond degree D
// only touch digits past (D+1)*|v(x)|, which caps what one run can certify.
InterpReport infinity_interpolation_check(const PrimeCtx* P, const LaurentElem& x,
                                          const ZpApprox& y, int D, int target);

}  // namespace carlgoss
