#include "carlgoss/verify.hpp"

#include <memory>
#include <random>
#include <sstream>

#include "carlgoss/common.hpp"
#include "carlgoss/invariants.hpp"
#include "carlgoss/lfunction.hpp"
#include "carlgoss/parallel.hpp"
#include "carlgoss/powersums.hpp"
#include "carlgoss/sinnott.hpp"

namespace carlgoss {

void SuiteResult::merge(const SuiteResult& o) {
  cases += o.cases;
  failed += o.failed;
  failures.insert(failures.end(), o.failures.begin(), o.failures.end());
}

namespace {

constexpr unsigned kSeed = 0x5eed2026u;

struct Tally {
  SuiteResult r;
  explicit Tally(std::string name) { r.suite = std::move(name); }
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    ++r.cases;
    if (!ok && r.failures.size() < 64) r.failures.push_back(CaseResult{name, detail});
    if (!ok) ++r.failed;
  }
};

struct Desk {
  std::unique_ptr<Fq> F;
  std::unique_ptr<PrimeCtx> P;
  std::string tag;
};

// the two standing configurations: q = 3 with pi = t and with pi = t^2 + 1
std::vector<Desk> desks() {
  std::vector<Desk> out;
  {
    Desk d;
    d.F = std::make_unique<Fq>(3, 1);
    d.P = std::make_unique<PrimeCtx>(d.F.get(), Poly::variable(d.F.get()));
    d.tag = "d1";
    out.push_back(std::move(d));
  }
  {
    Desk d;
    d.F = std::make_unique<Fq>(3, 1);
    d.P = std::make_unique<PrimeCtx>(d.F.get(),
                                     Poly(d.F.get(), std::vector<fq_code>{1, 0, 1}));
    d.tag = "d2";
    out.push_back(std::move(d));
  }
  return out;
}

std::string fmt(const char* k, long long v) {
  std::ostringstream os;
  os << k << "=" << v;
  return os.str();
}

PadicElem pz(const PrimeCtx* P, int M) { return PadicElem(P, Poly(P->field()), M); }

bool same_series(const std::vector<PadicElem>& a, const std::vector<PadicElem>& b,
                 const PrimeCtx* P, int M) {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const PadicElem& x = k < a.size() ? a[k] : pz(P, M);
    const PadicElem& y = k < b.size() ? b[k] : pz(P, M);
    if (!(x == y)) return false;
  }
  return true;
}

// (1 - pi^j X^d) Z(X, j) mod pi^M, built from the exact zeta polynomial;
// an independent pipeline from both L paths.
std::vector<PadicElem> lpoly_from_zeta(const PrimeCtx* P, long long j, int M) {
  const Fq* F = P->field();
  std::vector<Poly> z = zeta_polynomial(F, j);
  int d = P->d();
  PadicElem pij =
      j >= M ? pz(P, M) : PadicElem(P, P->pi_power(static_cast<int>(j)), M);
  std::vector<PadicElem> c(z.size() + d, pz(P, M));
  for (std::size_t n = 0; n < z.size(); ++n) {
    PadicElem zn(P, P->reduce(z[n], M), M);
    c[n] = c[n] + zn;
    c[n + d] = c[n + d] - pij * zn;
  }
  while (c.size() > 1 && c.back().zero_rep()) c.pop_back();
  return c;
}

}  // namespace

SuiteResult crit_forced_power_sums(int threads) {
  Tally t("forced power sums");
  for (int q : {3, 5}) {
    Fq F(q, 1);
    for (int n = 1; n <= 3; ++n) {
      long long top = 1;
      for (int k = 0; k < n; ++k) top *= q;
      std::vector<Poly> S = power_sum_sweep(&F, n, top - 2, threads);
      long long bad = -1;
      for (long long j = 1; j <= top - 2 && bad < 0; ++j)
        if (!S[j].zero()) bad = j;
      t.check("power sums vanish q=" + std::to_string(q) + " n=" + std::to_string(n),
              bad < 0, bad < 0 ? "" : fmt("j", bad));
    }
  }
  return t.r;
}

SuiteResult crit_bernoulli_table(int threads) {
  Tally t("bernoulli table");
  for (int q : {3, 5}) {
    Fq F(q, 1);
    std::vector<Poly> beta = bernoulli_table(&F, 300, threads);
    std::vector<fq_code> mc(q + 1, 0);
    mc[1] = F.neg(1);
    mc[q] = 1;
    Poly carlitz_mod(&F, mc);  // t^q - t
    Poly one = Poly::constant(&F, 1);

    long long bad_zero = -1, bad_congr = -1, bad_deg = -1, bad_small = -1;
    for (long long j = 0; j <= 300; ++j) {
      if (beta[j].zero() && bad_zero < 0) bad_zero = j;
      if (!divrem(beta[j] - one, carlitz_mod).second.zero() && bad_congr < 0)
        bad_congr = j;
      if (beta[j].degree() > zeta_degree_bound(&F, j) * j && bad_deg < 0) bad_deg = j;
      if (j <= q - 1 && !(beta[j] == one) && bad_small < 0) bad_small = j;
    }
    std::string qs = " q=" + std::to_string(q);
    t.check("beta nonzero" + qs, bad_zero < 0, bad_zero < 0 ? "" : fmt("j", bad_zero));
    t.check("beta congruent 1 mod t^q-t" + qs, bad_congr < 0,
            bad_congr < 0 ? "" : fmt("j", bad_congr));
    t.check("beta degree bound" + qs, bad_deg < 0, bad_deg < 0 ? "" : fmt("j", bad_deg));
    t.check("beta is 1 for j < q" + qs, bad_small < 0,
            bad_small < 0 ? "" : fmt("j", bad_small));
  }
  return t.r;
}

SuiteResult crit_forced_zeros(int threads) {
  Tally t("forced zeta zeros");
  for (int q : {3, 5}) {
    Fq F(q, 1);
    int nmax = zeta_degree_bound(&F, 300);
    std::vector<std::vector<Poly>> S(nmax + 1);
    for (int n = 0; n <= nmax; ++n) S[n] = power_sum_sweep(&F, n, 300, threads);
    long long bad = -1;
    for (long long j = q - 1; j <= 300 && bad < 0; j += q - 1) {
      Poly z(&F);
      for (int n = 0; n <= nmax; ++n) z = z + S[n][j];
      if (!z.zero()) bad = j;
    }
    t.check("Z(1,j) vanishes on the forced class q=" + std::to_string(q), bad < 0,
            bad < 0 ? "" : fmt("j", bad));
  }
  return t.r;
}

SuiteResult crit_lfun_zeta(int threads) {
  Tally t("L against zeta");
  for (const Desk& dk : desks()) {
    const PrimeCtx* P = dk.P.get();
    int p = dk.F->p();
    long long L = P->residue_size() - 1;
    for (long long i = 0; i < L; ++i) {
      // direct series against the zeta polynomial at every congruent j <= 50
      std::vector<long long> js;
      for (long long j = (i == 0 ? L : i); j <= 50; j += L) js.push_back(j);
      std::vector<int> ok(js.size(), 0);
      parallel_for(js.size(), threads, [&](std::size_t k) {
        long long j = js[k];
        ZpApprox y = ZpApprox::integer(p, j, 2);
        std::vector<PadicElem> direct = lfunction_direct(P, i, y, 4, 6, 1);
        ok[k] = same_series(direct, lpoly_from_zeta(P, j, 4), P, 4) ? 1 : 0;
      });
      long long bad = -1;
      for (std::size_t k = 0; k < js.size(); ++k)
        if (!ok[k] && bad < 0) bad = js[k];
      t.check("direct L equals (1-pi^j X^d) Z " + dk.tag + " i=" + std::to_string(i),
              bad < 0, bad < 0 ? "" : fmt("j", bad));
    }
    // mod-pi collapse: L(X, y) == Z(X, i) mod pi for i >= 1 and arbitrary y
    std::mt19937 rng(kSeed);
    std::vector<long long> ys(20);
    for (auto& v : ys) v = rng() % 27;
    for (long long i = 1; i < L; ++i) {
      std::vector<PadicElem> zi = lpoly_from_zeta(P, i, 1);
      // pi^i contributes nothing mod pi, so this is Z(X, i) mod pi
      std::vector<int> ok(ys.size(), 0);
      parallel_for(ys.size(), threads, [&](std::size_t k) {
        ZpApprox y(p, ys[k], 3);
        std::vector<PadicElem> direct = lfunction_direct(P, i, y, 1, 6, 1);
        ok[k] = same_series(direct, zi, P, 1) ? 1 : 0;
      });
      long long bad = -1;
      for (std::size_t k = 0; k < ys.size(); ++k)
        if (!ok[k] && bad < 0) bad = ys[k];
      t.check("L collapses to Z(X,i) mod pi " + dk.tag + " i=" + std::to_string(i),
              bad < 0, bad < 0 ? "" : fmt("y", bad));
    }
  }
  return t.r;
}

SuiteResult crit_even_vanishing(int threads) {
  Tally t("forced special values");
  (void)threads;
  for (const Desk& dk : desks()) {
    const PrimeCtx* P = dk.P.get();
    int p = dk.F->p();
    int q = dk.F->q();
    long long L = P->residue_size() - 1;
    for (long long i = 0; i < L; ++i) {
      if (i % (q - 1) != 0) continue;
      long long bad = -1;
      for (long long y0 = 0; y0 < p * p && bad < 0; ++y0) {
        LSpecial sp = lfunction_special(P, i, ZpApprox(p, y0, 2), 4);
        if (!sp.value_at_one.zero_rep()) bad = y0;
      }
      t.check("L(1,y) vanishes " + dk.tag + " i=" + std::to_string(i), bad < 0,
              bad < 0 ? "" : fmt("y", bad));
    }
  }
  return t.r;
}

SuiteResult crit_theta_structure(int threads) {
  Tally t("theta structure");
  (void)threads;
  for (const Desk& dk : desks()) {
    const PrimeCtx* P = dk.P.get();
    long long L = P->residue_size() - 1;
    Tower tw(P);

    for (int n = 0; n <= 2; ++n) {
      int D = Tower::default_window(P, n);
      const GammaLevel& G = tw.level(n);
      GroupRingElem one = GroupRingElem::unit(&G);

      long long bad_const = -1, bad_window = -1;
      for (long long i = 0; i < L; ++i) {
        ThetaSeries th = theta_series(tw, n, i, D);
        if (!(th.coeff[0] == one) && bad_const < 0) bad_const = i;
        if (i != 0 && !theta_window_ok(th) && bad_window < 0) bad_window = i;
      }
      std::string tag = " " + dk.tag + " n=" + std::to_string(n);
      t.check("theta constant term is 1" + tag, bad_const < 0,
              bad_const < 0 ? "" : fmt("i", bad_const));
      t.check("theta degree window clear" + tag, bad_window < 0,
              bad_window < 0 ? "" : fmt("i", bad_window));

      // multiplying the truncated inverse factors back must give 1
      long long bad_inv = -1;
      for (long long i : {0LL, 1LL}) {
        ThetaSeries th = theta_series(tw, n, i, D);
        const std::vector<Poly>& primes = tw.primes_to(D);
        const std::vector<FrobData>& dec = tw.decomposition(n, D);
        for (std::size_t k = 0; k < primes.size(); ++k) {
          int g = primes[k].degree();
          if (g > D) break;
          int scode = P->res_pow(dec[k].delta, (L - i) % L);
          int gidx = G.inv(dec[k].gamma);
          for (int m2 = D; m2 >= g; --m2) {
            GroupRingElem sub = th.coeff[m2 - g].translated(gidx).scaled(scode);
            th.coeff[m2] = th.coeff[m2] - sub;
          }
        }
        bool is_one = th.coeff[0] == one;
        for (int k = 1; k <= D && is_one; ++k) is_one = th.coeff[k].zero();
        if (!is_one && bad_inv < 0) bad_inv = i;
      }
      t.check("Euler factors invert back to 1" + tag, bad_inv < 0,
              bad_inv < 0 ? "" : fmt("i", bad_inv));
    }

    // one projection step of the tower, both adjacent levels at a common D
    for (int n = 0; n <= 1; ++n) {
      int D = Tower::default_window(P, n + 1);
      long long bad = -1;
      for (long long i = 0; i < L; ++i) {
        ThetaSeries hi = theta_series(tw, n + 1, i, D);
        ThetaSeries lo = theta_series(tw, n, i, D);
        ThetaSeries down = project_theta(tw, hi, n);
        bool same = true;
        for (int k = 0; k <= D && same; ++k) same = down.coeff[k] == lo.coeff[k];
        if (!same && bad < 0) bad = i;
      }
      t.check("tower projection " + dk.tag + " n=" + std::to_string(n + 1) + "->" +
                  std::to_string(n),
              bad < 0, bad < 0 ? "" : fmt("i", bad));
    }

    // the forced-index sharp value: exact division must go through
    for (int n = 0; n <= 2; ++n) {
      long long bad = -1;
      std::string err;
      for (long long i = 1; i < L; ++i) {
        if (i % (dk.F->q() - 1) != 0) continue;
        try {
          theta_sharp_at_one(tw, n, i);
        } catch (const guard_error& e) {
          if (bad < 0) {
            bad = i;
            err = e.what();
          }
        }
      }
      t.check("sharp division at forced indices " + dk.tag + " n=" + std::to_string(n),
              bad < 0, bad < 0 ? "" : fmt("i", bad) + " " + err);
    }
  }
  return t.r;
}

SuiteResult crit_sinnott_cross(int threads) {
  Tally t("mapped theta against L");
  (void)threads;
  for (const Desk& dk : desks()) {
    const PrimeCtx* P = dk.P.get();
    long long L = P->residue_size() - 1;
    int n_top = P->d() == 1 ? 2 : 1;
    Tower tw(P);
    for (int n = 0; n <= n_top; ++n)
      for (long long i = 1; i < L; ++i) {
        StickLfunReport rep = stick_lfun_check(tw, i, n);
        t.check("mapped theta equals exact L " + dk.tag + " n=" + std::to_string(n) +
                    " i=" + std::to_string(i),
                rep.ok, rep.ok ? "" : fmt("mismatches", rep.mismatches));
      }
  }
  return t.r;
}

SuiteResult crit_kernel(int threads) {
  Tally t("kernel witnesses");
  (void)threads;
  for (int q : {3, 5}) {
    Fq F(q, 1);
    PrimeCtx P(&F, Poly::variable(&F));
    Tower tw(&P);
    for (int n = 1; n <= 3; ++n) {
      GroupRingElem w = kernel_witness(tw, n);
      std::string tag = " q=" + std::to_string(q) + " n=" + std::to_string(n);
      bool nz = !w.zero();
      bool killed = dirfunction_zero(sinnott_map(w));
      t.check("witness nonzero and killed" + tag, nz && killed,
              nz ? "map image nonzero" : "witness is zero");
      if (q == 3 && n == 1)
        t.check("witness spans the full first level", w == norm_element(&tw.level(1)));
    }
  }
  return t.r;
}

SuiteResult crit_m_invariant(int threads) {
  Tally t("m invariants");
  for (const Desk& dk : desks()) {
    const PrimeCtx* P = dk.P.get();
    long long L = P->residue_size() - 1;
    Tower tw(P);
    for (long long i = 1; i < L; ++i) {
      std::string tag = " " + dk.tag + " i=" + std::to_string(i);
      MInvariant mi = m_invariant(P, i);
      t.check("m resolved" + tag, mi.resolved, fmt("M", mi.M));
      if (!mi.resolved) continue;
      if (dk.tag == "d1" && i == 1)
        t.check("m value is 0" + tag, mi.value == 0, fmt("value", mi.value));
      t.check("certificate recomputes" + tag, verify_m_certificate(P, mi, threads));
      if (!mi.forced) t.check("degree estimate holds" + tag, m_degree_bound_check(P, mi));
      InequalityRow row = inequality_report(tw, i, 3);
      t.check("N at most reflected m" + tag, row.ok,
              fmt("N", row.n_value) + " " + fmt("m", row.m.value));
      if (dk.tag == "d1" && i == 1)
        t.check("N value is 0" + tag, row.n_found && row.n_value == 0,
                fmt("N", row.n_value));
    }
  }
  return t.r;
}

SuiteResult crit_n_invariant(int threads) {
  Tally t("sharpened tower resolution");
  (void)threads;
  for (const Desk& dk : desks()) {
    const PrimeCtx* P = dk.P.get();
    long long L = P->residue_size() - 1;
    Tower tw(P);
    for (long long i = 1; i < L; ++i) {
      NInvariant ni = n_invariant(tw, i, 3);
      t.check("sharp value found " + dk.tag + " i=" + std::to_string(i), ni.found,
              ni.found ? "" : "no level <= 3");
    }
  }
  return t.r;
}

SuiteResult crit_zeta_infty(int threads) {
  Tally t("zeta at infinity");
  Fq F(3, 1);

  // values at (t^j, -j) against the exact Z(1, j)
  {
    std::vector<int> ok(21, 0);
    parallel_for(21, threads, [&](std::size_t j) {
      LaurentElem x = LaurentElem::t_power(&F, static_cast<int>(j));
      ZpApprox y = ZpApprox::integer(3, static_cast<long long>(j), 5).negated();
      LaurentElem zi = zeta_infty(x, y, 12);
      LaurentElem diff = zi - LaurentElem::from_poly(zeta_at_one(&F, static_cast<long long>(j)));
      auto v = diff.valuation();
      ok[j] = (v.floor && v.v >= 12) ? 1 : 0;
    });
    long long bad = -1;
    for (std::size_t j = 0; j < ok.size(); ++j)
      if (!ok[j] && bad < 0) bad = static_cast<long long>(j);
    t.check("series value matches Z(1,j) for j <= 20", bad < 0,
            bad < 0 ? "" : fmt("j", bad));
  }

  // block valuation bound v(B_n) >= p^{n-1}
  {
    long long bad_n = -1;
    for (int n = 1; n <= 4 && bad_n < 0; ++n) {
      long long bound = 1;
      for (int k = 1; k < n; ++k) bound *= 3;
      for (long long y0 : {0LL, 1LL, 7LL, 22LL, 55LL}) {
        LaurentElem b =
            zeta_infty_block(&F, n, ZpApprox(3, y0, 4), static_cast<int>(bound) + 3);
        auto v = b.valuation();
        if (v.v < bound) {
          bad_n = n;
          break;
        }
      }
    }
    t.check("block valuation bound for n <= 4", bad_n < 0,
            bad_n < 0 ? "" : fmt("n", bad_n));
  }

  // Euler product over degree <= 6 against the twisted series, 8 digits
  for (const Desk& dk : desks()) {
    const PrimeCtx* P = dk.P.get();
    std::mt19937 rng(kSeed);
    std::vector<long long> ys(20);
    for (auto& v : ys) v = rng() % 27;
    std::vector<int> ok(ys.size(), 0);
    parallel_for(ys.size(), threads, [&](std::size_t k) {
      LaurentElem x = LaurentElem::t_power(dk.F.get(), 2);
      InterpReport rep =
          infinity_interpolation_check(P, x, ZpApprox(3, ys[k], 3), 6, 8);
      ok[k] = (rep.ok && rep.certified >= 8) ? 1 : 0;
    });
    long long bad = -1;
    for (std::size_t k = 0; k < ys.size(); ++k)
      if (!ok[k] && bad < 0) bad = ys[k];
    t.check("Euler product matches to 8 digits " + dk.tag, bad < 0,
            bad < 0 ? "" : fmt("y", bad));

    bool rejected = false;
    try {
      infinity_interpolation_check(P, LaurentElem::t_power(dk.F.get(), 0),
                                   ZpApprox(3, 1, 3), 6, 8);
    } catch (const precondition_error&) {
      rejected = true;
    }
    t.check("boundary x is rejected " + dk.tag, rejected);
  }
  return t.r;
}

std::vector<std::string> suite_names() {
  return {"simon", "beta", "interp", "stick", "sinnott", "invariant"};
}

SuiteResult run_suite(const std::string& name, int threads) {
  SuiteResult r;
  r.suite = name;
  auto add = [&](SuiteResult s) { r.merge(s); };
  if (name == "simon") {
    add(crit_forced_power_sums(threads));
  } else if (name == "beta") {
    add(crit_bernoulli_table(threads));
    add(crit_forced_zeros(threads));
  } else if (name == "interp") {
    add(crit_lfun_zeta(threads));
    add(crit_even_vanishing(threads));
    add(crit_zeta_infty(threads));
  } else if (name == "stick") {
    add(crit_theta_structure(threads));
  } else if (name == "sinnott") {
    add(crit_sinnott_cross(threads));
    add(crit_kernel(threads));
  } else if (name == "invariant") {
    add(crit_m_invariant(threads));
    add(crit_n_invariant(threads));
  } else {
    throw precondition_error("unknown suite: " + name);
  }
  return r;
}

std::vector<SuiteResult> run_all(int threads) {
  std::vector<SuiteResult> out;
  for (const std::string& name : suite_names()) out.push_back(run_suite(name, threads));
  return out;
}

}  // namespace carlgoss
