#include "carlgoss/invariants.hpp"

#include <cmath>
#include <limits>

#include "carlgoss/common.hpp"
#include "carlgoss/powersums.hpp"

namespace carlgoss {

namespace {

int seed_precision(const PrimeCtx* P, long long im, bool forced) {
  if (forced) return 8;
  long double est = static_cast<long double>(im) / P->d() *
                    std::log(static_cast<long double>(im) + 1) /
                    std::log(static_cast<long double>(P->field()->q()));
  return static_cast<int>(std::floor(est)) + 2;
}

}  // namespace

MInvariant m_invariant(const PrimeCtx* P, long long i, int M_init, int M_cap) {
  const Fq* F = P->field();
  int p = F->p();
  long long L = P->residue_size() - 1;
  long long im = ((i % L) + L) % L;
  if (im == 0) throw precondition_error("m_invariant: index 0 is excluded");
  bool forced = im % (F->q() - 1) == 0;

  MInvariant out;
  out.i = im;
  out.forced = forced;
  int M = M_init >= 1 ? M_init : seed_precision(P, im, forced);
  if (M > M_cap) M = M_cap;

  for (;;) {
    int m = 0;
    long long pm = 1;
    while (pm < M) {
      pm *= p;
      ++m;
    }
    out.M = M;
    out.m = m;
    out.rows.clear();
    int best = std::numeric_limits<int>::max();
    for (long long y0 = 0; y0 < pm; ++y0) {
      ZpApprox y(p, y0, m);
      LSpecial sp = lfunction_special(P, im, y, M);
      if (forced && !sp.value_at_one.zero_rep())
        throw guard_error("m_invariant: forced-zero special value is nonzero");
      PadicElem tgt = forced ? sp.derivative_at_one : sp.value_at_one;
      auto val = tgt.valuation();
      long long j = lfunction_crt_exponent(P, im, y, M);
      out.rows.push_back(MClassRow{y0, j, val.v, val.floor});
      if (!val.floor && val.v < best) {
        best = val.v;
        out.witness_y = y0;
        out.witness_j = j;
      }
    }
    if (best < std::numeric_limits<int>::max()) {
      out.resolved = true;
      out.value = best;
      return out;
    }
    if (M >= M_cap) {
      out.resolved = false;
      return out;
    }
    M = std::min(M * 2, M_cap);
  }
}

bool verify_m_certificate(const PrimeCtx* P, const MInvariant& mi, int threads) {
  const Fq* F = P->field();
  int p = F->p();
  int best = std::numeric_limits<int>::max();
  for (const MClassRow& row : mi.rows) {
    ZpApprox y(p, row.y, mi.m);
    int D = P->d() + zeta_degree_bound(F, row.j);
    LSpecial sp = lfunction_special_direct(P, mi.i, y, mi.M, D, threads);
    if (mi.forced && !sp.value_at_one.zero_rep()) return false;
    PadicElem tgt = mi.forced ? sp.derivative_at_one : sp.value_at_one;
    auto val = tgt.valuation();
    if (val.v != row.v || val.floor != row.floor) return false;
    if (!val.floor && val.v < best) best = val.v;
  }
  if (mi.resolved) {
    if (best == std::numeric_limits<int>::max() || best != mi.value) return false;
  } else {
    if (best != std::numeric_limits<int>::max()) return false;
  }
  return true;
}

bool m_degree_bound_check(const PrimeCtx* P, const MInvariant& mi) {
  if (!mi.resolved) return false;
  long double bound = static_cast<long double>(mi.i) / P->d() *
                      std::log(static_cast<long double>(mi.i) + 1) /
                      std::log(static_cast<long double>(P->field()->q()));
  return static_cast<long double>(mi.value) <= bound + 1e-9L;
}

InequalityRow inequality_report(Tower& tw, long long i, int n_max) {
  const PrimeCtx* P = tw.ctx();
  long long L = P->residue_size() - 1;
  long long im = ((i % L) + L) % L;
  if (im == 0) throw precondition_error("inequality_report: index 0 is excluded");

  InequalityRow row;
  row.i = im;
  NInvariant ni = n_invariant(tw, im, n_max);
  row.n_found = ni.found;
  row.n_value = ni.n;
  row.m = m_invariant(P, L - im);
  row.ok = row.n_found && row.m.resolved && row.n_value <= row.m.value;
  return row;
}

}  // namespace carlgoss
