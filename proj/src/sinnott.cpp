#include "carlgoss/sinnott.hpp"

#include "carlgoss/common.hpp"

namespace carlgoss {

int sinnott_digits(const PrimeCtx* P, int n) {
  int p = P->field()->p();
  int m = 0;
  long long pm = 1;
  while (pm < n + 1) {
    pm *= p;
    ++m;
  }
  return m;
}

DirFunction sinnott_map(const GroupRingElem& lam) {
  const GammaLevel* G = lam.group();
  if (G == nullptr) throw precondition_error("sinnott_map: element has no level");
  const PrimeCtx* P = G->ctx();
  const Fq* F = P->field();
  int n = G->level();
  int M = n + 1;
  int m = sinnott_digits(P, n);
  long long pm = 1;
  for (int k = 0; k < m; ++k) pm *= F->p();

  DirFunction out;
  out.n = n;
  out.m = m;
  out.table.assign(pm, PadicElem(P, Poly(F), M));
  for (int idx = 0; idx < G->size(); ++idx) {
    int c = lam.coeff(idx);
    if (c == 0) continue;
    PadicElem lift = teichmuller(PadicElem(P, P->res_poly(c), M));
    PadicElem kappa(P, G->rep_of(idx), M);
    PadicElem pw = PadicElem(P, Poly::constant(F, 1), M);
    for (long long y = 0; y < pm; ++y) {
      out.table[y] = out.table[y] + lift * pw;
      pw = pw * kappa;
    }
  }
  return out;
}

bool dirfunction_zero(const DirFunction& f) {
  for (const PadicElem& v : f.table)
    if (!v.zero_rep()) return false;
  return true;
}

GroupRingElem kernel_witness(Tower& tw, int n) {
  if (n < 1) throw precondition_error("kernel_witness: needs level >= 1");
  const PrimeCtx* P = tw.ctx();
  const GammaLevel& G = tw.level(n);
  const Fq* F = P->field();

  int a[3] = {0, 1, 2};
  int gi[3];
  for (int k = 0; k < 3; ++k) {
    Poly rep = Poly::constant(F, 1) + P->res_poly(a[k]) * P->pi_power(n);
    gi[k] = G.index_of(P->reduce(rep, n + 1));
  }
  int x3 = 1;
  int num = P->res_add(a[2], P->res_neg(a[0]));
  int den = P->res_add(a[1], P->res_neg(a[0]));
  int x2 = P->res_neg(P->res_mul(num, P->res_inv(den)));
  int x1 = P->res_neg(P->res_add(x2, x3));

  GroupRingElem w(&G);
  w.set_coeff(gi[0], x1);
  w.set_coeff(gi[1], x2);
  w.set_coeff(gi[2], x3);
  return w;
}

StickLfunReport stick_lfun_check(Tower& tw, long long i, int n, int D) {
  const PrimeCtx* P = tw.ctx();
  const Fq* F = P->field();
  if (D < 0) D = Tower::default_window(P, n);
  long long L = P->residue_size() - 1;

  ThetaSeries th = theta_series(tw, n, -i, D);
  std::vector<DirFunction> img;
  img.reserve(D + 1);
  for (int k = 0; k <= D; ++k) img.push_back(sinnott_map(th.coeff[k]));

  int m = sinnott_digits(P, n);
  long long pm = 1;
  for (int k = 0; k < m; ++k) pm *= F->p();
  int M = n + 1;
  PadicElem zero(P, Poly(F), M);

  StickLfunReport rep;
  for (long long y0 = 0; y0 < pm; ++y0) {
    ZpApprox y(F->p(), y0, m);
    std::vector<PadicElem> lc = lfunction_exact(P, ((i % L) + L) % L, y.negated(), M);
    for (int k = 0; k <= D; ++k) {
      const PadicElem& lhs = img[k].table[y0];
      const PadicElem& rhs = k < static_cast<int>(lc.size()) ? lc[k] : zero;
      ++rep.cases;
      if (lhs != rhs) ++rep.mismatches;
    }
  }
  rep.ok = rep.mismatches == 0;
  return rep;
}

}  // namespace carlgoss
