#include "carlgoss/theta.hpp"

#include <cstddef>

#include "carlgoss/common.hpp"

namespace carlgoss {

const GammaLevel& Tower::level(int n) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = levels_.find(n);
  if (it == levels_.end())
    it = levels_.emplace(n, std::make_unique<GammaLevel>(P_, n)).first;
  return *it->second;
}

void Tower::grow_primes(int D) {
  if (D <= primes_deg_) return;
  // append only: existing references keep their prefix and the decomposition
  // vectors stay aligned
  std::vector<Poly> all = monic_irreducibles(P_->field(), D);
  for (const Poly& qp : all) {
    if (qp.degree() <= primes_deg_ || qp == P_->pi()) continue;
    primes_.push_back(qp);
  }
  primes_deg_ = D;
}

const std::vector<Poly>& Tower::primes_to(int D) {
  std::lock_guard<std::mutex> lock(mu_);
  grow_primes(D);
  return primes_;
}

const std::vector<FrobData>& Tower::decomposition(int n, int D) {
  std::lock_guard<std::mutex> lock(mu_);
  grow_primes(D);
  auto it = levels_.find(n);
  if (it == levels_.end())
    it = levels_.emplace(n, std::make_unique<GammaLevel>(P_, n)).first;
  const GammaLevel& G = *it->second;
  std::vector<FrobData>& dec = decomp_[n];
  for (std::size_t k = dec.size(); k < primes_.size(); ++k)
    dec.push_back(frobenius_decompose(P_, G, primes_[k]));
  return dec;
}

ThetaSeries theta_series(Tower& tw, int n, long long i, int D) {
  const PrimeCtx* P = tw.ctx();
  if (n < 0 || D < 0) throw precondition_error("theta_series: need n >= 0 and D >= 0");
  long long L = P->residue_size() - 1;
  long long im = ((i % L) + L) % L;
  const GammaLevel& G = tw.level(n);
  const std::vector<Poly>& primes = tw.primes_to(D);
  const std::vector<FrobData>& dec = tw.decomposition(n, D);

  ThetaSeries th;
  th.n = n;
  th.i = im;
  th.D = D;
  th.coeff.assign(D + 1, GroupRingElem(&G));
  th.coeff[0] = GroupRingElem::unit(&G);

  for (std::size_t k = 0; k < primes.size(); ++k) {
    int g = primes[k].degree();
    if (g > D) break;
    int scode = P->res_pow(dec[k].delta, (L - im) % L);
    int gidx = G.inv(dec[k].gamma);
    // in-place inverse factor: ascending m sees the already-updated tail
    for (int m = g; m <= D; ++m)
      add_scaled_translate(th.coeff[m], th.coeff[m - g], gidx, scode);
  }
  return th;
}

bool theta_window_ok(const ThetaSeries& th) {
  const PrimeCtx* P = th.coeff.at(0).group()->ctx();
  int lo = P->d() * (th.n + 1);
  for (int k = lo; k <= th.D; ++k)
    if (!th.coeff[k].zero()) return false;
  return true;
}

GroupRingElem theta_sharp_at_one(Tower& tw, int n, long long i, int D) {
  const PrimeCtx* P = tw.ctx();
  long long L = P->residue_size() - 1;
  long long im = ((i % L) + L) % L;
  if (im == 0)
    throw precondition_error("theta_sharp: the trivial character index is excluded");
  if (D < 0) D = Tower::default_window(P, n);
  int dn1 = P->d() * (n + 1);
  if (D < dn1) throw precondition_error("theta_sharp: window bound below the degree bound");

  ThetaSeries th = theta_series(tw, n, im, D);
  if (!theta_window_ok(th))
    throw guard_error("theta_sharp: degree window not clear; widen the truncation");

  const GammaLevel& G = tw.level(n);
  bool forced = im % (P->field()->q() - 1) == 0;
  if (!forced) {
    GroupRingElem s(&G);
    for (int k = 0; k < dn1; ++k) s = s + th.coeff[k];
    return s;
  }
  // exact quotient by (1 - X): partial sums are the quotient's coefficients
  // and the full sum is the remainder, which must vanish
  GroupRingElem run(&G), qsum(&G);
  for (int k = 0; k < dn1; ++k) {
    run = run + th.coeff[k];
    if (k < dn1 - 1) qsum = qsum + run;
  }
  if (!run.zero())
    throw guard_error("theta_sharp: series for a forced-zero index does not vanish at 1");
  return qsum;
}

NInvariant n_invariant(Tower& tw, long long i, int n_max) {
  for (int n = 0; n <= n_max; ++n)
    if (!theta_sharp_at_one(tw, n, i).zero()) return NInvariant{true, n};
  return NInvariant{};
}

ThetaSeries project_theta(Tower& tw, const ThetaSeries& th, int to_level) {
  const GammaLevel& from = *th.coeff.at(0).group();
  const GammaLevel& to = tw.level(to_level);
  std::vector<int> proj = projection_indices(from, to);
  const PrimeCtx* P = tw.ctx();

  ThetaSeries out;
  out.n = to_level;
  out.i = th.i;
  out.D = th.D;
  out.coeff.assign(th.D + 1, GroupRingElem(&to));
  for (int k = 0; k <= th.D; ++k)
    for (int idx = 0; idx < from.size(); ++idx) {
      int tgt = proj[idx];
      out.coeff[k].set_coeff(
          tgt, P->res_add(out.coeff[k].coeff(tgt), th.coeff[k].coeff(idx)));
    }
  return out;
}

}  // namespace carlgoss
