#include "carlgoss/lfunction.hpp"

#include <algorithm>

#include "carlgoss/common.hpp"
#include "carlgoss/parallel.hpp"
#include "carlgoss/powersums.hpp"

namespace carlgoss {

namespace {

long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

int min_digits(int p, int M) {
  int m = 0;
  long long pm = 1;
  while (pm < M) {
    pm *= p;
    ++m;
  }
  return m;
}

PadicElem padic_zero(const PrimeCtx* P, int M) {
  return PadicElem(P, Poly(P->field()), M);
}

PadicElem int_scalar(const PrimeCtx* P, long long n, int M) {
  int p = P->field()->p();
  fq_code c = static_cast<fq_code>(((n % p) + p) % p);
  return PadicElem(P, Poly::constant(P->field(), c), M);
}

bool divisible_by_pi(const PrimeCtx* P, const Poly& a) {
  return divrem(a, P->pi()).second.zero();
}

}  // namespace

PadicElem power_sum_mod(const PrimeCtx* P, int n, long long j, int M) {
  if (n < 0 || j < 0 || M < 1)
    throw precondition_error("power_sum_mod: need n, j >= 0 and M >= 1");
  PadicElem acc = padic_zero(P, M);
  for_each_monic(P->field(), n, [&](const Poly& a) {
    acc = acc + padic_pow_int(PadicElem(P, P->reduce(a, M), M), j);
  });
  return acc;
}

long long lfunction_crt_exponent(const PrimeCtx* P, long long i, const ZpApprox& y, int M) {
  int p = P->field()->p();
  if (M < 1) throw precondition_error("lfunction: M must be >= 1");
  if (y.p() != p) throw precondition_error("lfunction: y lives at the wrong p");
  int m = min_digits(p, M);
  if (y.digits() < m)
    throw precondition_error("lfunction: y needs at least ceil(log_p M) digits");
  long long pm = 1;
  for (int k = 0; k < m; ++k) pm *= p;
  long long L = P->residue_size() - 1;
  long long r1 = y.value() % pm;
  long long r2 = ((i % L) + L) % L;
  // p^m and q^d - 1 are coprime: solve j == r1 (p^m), j == r2 (L)
  long long x, yk;
  egcd(pm, L, x, yk);
  long long k = ((r2 - r1) % L) * (x % L) % L;
  k = ((k % L) + L) % L;
  long long j = r1 + pm * k;
  if (j == 0) j = pm * L;
  return j;
}

std::vector<PadicElem> lfunction_exact(const PrimeCtx* P, long long i, const ZpApprox& y,
                                       int M) {
  const Fq* F = P->field();
  long long j = lfunction_crt_exponent(P, i, y, M);
  int d = P->d();
  int nz = zeta_degree_bound(F, j);
  std::vector<PadicElem> S;
  S.reserve(nz + 1);
  for (int n = 0; n <= nz; ++n) S.push_back(power_sum_mod(P, n, j, M));
  PadicElem pij =
      j >= M ? padic_zero(P, M) : PadicElem(P, P->pi_power(static_cast<int>(j)), M);
  std::vector<PadicElem> c(nz + d + 1, padic_zero(P, M));
  for (int n = 0; n <= nz; ++n) c[n] = c[n] + S[n];
  for (int n = 0; n <= nz; ++n) c[n + d] = c[n + d] - pij * S[n];
  while (c.size() > 1 && c.back().zero_rep()) c.pop_back();
  return c;
}

std::vector<PadicElem> lfunction_direct(const PrimeCtx* P, long long i, const ZpApprox& y,
                                        int M, int D, int threads) {
  const Fq* F = P->field();
  if (M < 1 || D < 0) throw precondition_error("lfunction_direct: need M >= 1, D >= 0");
  long long L = P->residue_size() - 1;
  long long e_teich = ((i % L) + L) % L;
  std::vector<PadicElem> c;
  c.reserve(D + 1);
  for (int n = 0; n <= D; ++n) {
    std::vector<Poly> monics = monic_polys(F, n);
    std::vector<PadicElem> slot(monics.size(), padic_zero(P, M));
    parallel_for(monics.size(), threads, [&](std::size_t idx) {
      const Poly& a = monics[idx];
      if (divisible_by_pi(P, a)) return;
      PadicElem am(P, P->reduce(a, M), M);
      PadicElem w = padic_pow_int(teichmuller(am), e_teich);
      slot[idx] = w * padic_pow_zp(one_unit_part(am), y, M);
    });
    PadicElem acc = padic_zero(P, M);
    for (const PadicElem& s : slot) acc = acc + s;
    c.push_back(acc);
  }
  while (c.size() > 1 && c.back().zero_rep()) c.pop_back();
  return c;
}

namespace {

LSpecial special_from_coeffs(const PrimeCtx* P, const std::vector<PadicElem>& c, int M) {
  LSpecial out{padic_zero(P, M), padic_zero(P, M)};
  for (std::size_t n = 0; n < c.size(); ++n) {
    out.value_at_one = out.value_at_one + c[n];
    out.derivative_at_one = out.derivative_at_one + int_scalar(P, n, M) * c[n];
  }
  return out;
}

}  // namespace

LSpecial lfunction_special(const PrimeCtx* P, long long i, const ZpApprox& y, int M) {
  return special_from_coeffs(P, lfunction_exact(P, i, y, M), M);
}

LSpecial lfunction_special_direct(const PrimeCtx* P, long long i, const ZpApprox& y, int M,
                                  int D, int threads) {
  return special_from_coeffs(P, lfunction_direct(P, i, y, M, D, threads), M);
}

LaurentElem zeta_infty_block(const Fq* F, int n, const ZpApprox& y, int abs_prec) {
  if (n < 0 || abs_prec < 1)
    throw precondition_error("zeta_infty_block: need n >= 0 and abs_prec >= 1");
  LaurentElem acc = LaurentElem::zero_to(F, LaurentElem::EXACT);
  for_each_monic(F, n, [&](const Poly& a) {
    acc = acc + laurent_pow_zp(sign_and_one_unit_infty(a).one_unit, y, abs_prec);
  });
  return acc;
}

LaurentElem zeta_infty(const LaurentElem& x, const ZpApprox& y, int target) {
  const Fq* F = x.field();
  if (F == nullptr || x.zero_rep())
    throw precondition_error("zeta_infty: x must be a nonzero series");
  if (target < 1) throw precondition_error("zeta_infty: target must be >= 1");
  int p = F->p();
  long long vx = x.valuation().v;

  // nstar: past it every block bound p^{n-1} + n*vx stays >= target
  int nstar = 1;
  {
    int last_bad = 0;
    long long pw = 1;
    for (int n = 1;; ++n) {
      long long bound = pw + static_cast<long long>(n) * vx;
      if (bound < target) last_bad = n;
      if (bound >= target && pw * (p - 1) + vx >= 0) break;
      if (pw > (1LL << 60) / p)
        throw precondition_error("zeta_infty: truncation bound overflow");
      pw *= p;
    }
    nstar = last_bad + 1;
  }

  ZpApprox e = y.negated();
  LaurentElem acc = LaurentElem::t_power(F, 0);
  for (int n = 1; n < nstar; ++n) {
    int block_prec = static_cast<int>(target - static_cast<long long>(n) * vx);
    LaurentElem block = zeta_infty_block(F, n, e, block_prec);
    acc = acc + block * laurent_pow_int(x, n);
  }
  return acc.truncated(target);
}

InterpReport infinity_interpolation_check(const PrimeCtx* P, const LaurentElem& x,
                                          const ZpApprox& y, int D, int target) {
  const Fq* F = P->field();
  if (x.field() != F) throw precondition_error("interpolation check: field mismatch");
  if (x.zero_rep() || x.valuation().floor || x.valuation().v >= 0)
    throw precondition_error("interpolation check: x must have v(x) < 0 strictly");
  if (D < 1 || target < 1)
    throw precondition_error("interpolation check: need D >= 1 and target >= 1");
  int g1 = -x.valuation().v;
  int cert = static_cast<int>(
      std::min<long long>(target, static_cast<long long>(D + 1) * g1));

  LaurentElem invx = laurent_invert(x, cert);
  std::vector<LaurentElem> invx_pow(D + 1, LaurentElem::t_power(F, 0));
  for (int g = 1; g <= D; ++g) invx_pow[g] = invx_pow[g - 1] * invx;

  ZpApprox e = y.negated();
  LaurentElem one = LaurentElem::t_power(F, 0);

  // LHS^{-1}: the product of the Euler factors themselves. Comparing
  // prod * RHS against 1 avoids inverting the product.
  LaurentElem prod = one;
  for (const Poly& qp : monic_irreducibles(F, D)) {
    if (qp == P->pi()) continue;
    int g = qp.degree();
    LaurentElem u = laurent_pow_zp(sign_and_one_unit_infty(qp).one_unit, e, cert);
    prod = prod * (one - u * invx_pow[g]);
  }

  LaurentElem pi_unit = sign_and_one_unit_infty(P->pi()).one_unit;
  LaurentElem pifac = one - laurent_pow_zp(pi_unit, e, cert) * invx_pow[P->d()];
  LaurentElem rhs = pifac * zeta_infty(invx, y, cert);

  LaurentElem diff = (prod * rhs - one).truncated(cert);
  auto v = diff.valuation();
  return InterpReport{v.floor && v.v >= cert, cert};
}

}  // namespace carlgoss
