// carlgoss: exact arithmetic for the Carlitz cyclotomic tower at one prime.
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "carlgoss/invariants.hpp"
#include "carlgoss/io.hpp"
#include "carlgoss/powersums.hpp"
#include "carlgoss/verify.hpp"

using namespace carlgoss;

namespace {

struct Opts {
  int p = 3;
  int e = 1;
  std::vector<int> modulus;
  std::vector<int> prime = {0, 1};  // pi = t
  int threads = 1;
  bool json = false;
};

std::unique_ptr<Fq> make_field(const Opts& o) {
  std::vector<int> mod = o.modulus;
  if (o.e > 1 && mod.empty()) {
    if (o.p == 3 && o.e == 2)
      mod = {1, 0, 1};  // u^2 + 1, irreducible since -1 is not a square mod 3
    else
      throw precondition_error("field: --modulus is required when e > 1");
  }
  return std::make_unique<Fq>(o.p, o.e, mod);
}

Poly make_prime_poly(const Fq* F, const Opts& o) {
  std::vector<fq_code> c;
  for (int v : o.prime) {
    if (v < 0 || v >= F->q()) throw precondition_error("prime: code out of range");
    c.push_back(static_cast<fq_code>(v));
  }
  return Poly(F, c);
}

json field_json(const Fq* F) {
  json j;
  j["p"] = F->p();
  j["e"] = F->e();
  j["modulus"] = F->prime_field() ? json::array() : json(F->modulus());
  return j;
}

void emit(const json& j) { std::cout << dump_canonical(j); }

std::string gr_text(const GroupRingElem& g) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < g.group()->size(); ++k) {
    if (g.coeff(k) == 0) continue;
    if (!first) os << " + ";
    os << g.coeff(k) << "[" << k << "]";
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string padic_text(const PadicElem& a) {
  std::ostringstream os;
  os << (a.rep().zero() ? "0" : to_string(a.rep())) << " + O(pi^" << a.prec() << ")";
  return os.str();
}

int cmd_bernoulli(const Opts& o, long long jmax, long long jonly, bool table_mode) {
  std::unique_ptr<Fq> F = make_field(o);
  std::vector<long long> js;
  if (!table_mode) {
    js.push_back(jonly);
  } else {
    for (long long j = 0; j <= jmax; ++j) js.push_back(j);
  }
  std::vector<Poly> vals;
  if (table_mode) {
    vals = bernoulli_table(F.get(), jmax, o.threads);
  } else {
    vals.push_back(bernoulli_goss(F.get(), jonly));
  }
  if (o.json) {
    json out;
    out["field"] = field_json(F.get());
    out["values"] = json::array();
    for (std::size_t k = 0; k < js.size(); ++k)
      out["values"].push_back(json{{"j", js[k]}, {"beta", poly_json(vals[table_mode ? js[k] : 0])}});
    emit(out);
  } else {
    for (std::size_t k = 0; k < js.size(); ++k)
      std::cout << "beta(" << js[k] << ") = " << to_string(vals[table_mode ? js[k] : 0])
                << "\n";
  }
  return 0;
}

int cmd_zeta(const Opts& o, long long j, bool at_one, bool infty, int xpow, long long y0,
             bool ynegate, int ydigits, int target) {
  std::unique_ptr<Fq> F = make_field(o);
  if (infty) {
    ZpApprox y(F->p(), y0, ydigits);
    if (ynegate) y = y.negated();
    LaurentElem z = zeta_infty(LaurentElem::t_power(F.get(), xpow), y, target);
    if (o.json) {
      json out;
      out["field"] = field_json(F.get());
      out["xpow"] = xpow;
      out["y"] = zp_json(y);
      out["target"] = target;
      out["value"] = laurent_json(z);
      emit(out);
    } else {
      std::cout << "zeta_infty(t^" << xpow << ", y) = " << laurent_json(z).dump() << "\n";
    }
    return 0;
  }
  std::vector<Poly> z = zeta_polynomial(F.get(), j);
  if (o.json) {
    json out;
    out["field"] = field_json(F.get());
    out["j"] = j;
    out["coefficients"] = json::array();
    for (const Poly& c : z) out["coefficients"].push_back(poly_json(c));
    if (at_one) out["at_one"] = poly_json(zeta_at_one(F.get(), j));
    emit(out);
  } else {
    for (std::size_t n = 0; n < z.size(); ++n)
      std::cout << "Z[" << n << "] = " << to_string(z[n]) << "\n";
    if (at_one) std::cout << "Z(1) = " << to_string(zeta_at_one(F.get(), j)) << "\n";
  }
  return 0;
}

int cmd_lfunction(const Opts& o, long long i, long long y0, bool ynegate, int ydigits,
                  int M, int D, const std::string& method, bool special) {
  std::unique_ptr<Fq> F = make_field(o);
  PrimeCtx P(F.get(), make_prime_poly(F.get(), o));
  ZpApprox y(F->p(), y0, ydigits);
  if (ynegate) y = y.negated();

  std::vector<PadicElem> ex, di;
  if (method != "direct") ex = lfunction_exact(&P, i, y, M);
  if (method != "exact") di = lfunction_direct(&P, i, y, M, D, o.threads);
  bool both = method == "both";
  bool agree = true;
  if (both) {
    std::size_t n = std::max(ex.size(), di.size());
    for (std::size_t k = 0; k < n && agree; ++k) {
      PadicElem a = k < ex.size() ? ex[k] : PadicElem(&P, Poly(F.get()), M);
      PadicElem b = k < di.size() ? di[k] : PadicElem(&P, Poly(F.get()), M);
      agree = a == b;
    }
  }
  const std::vector<PadicElem>& c = method == "direct" ? di : ex;

  json out;
  out["field"] = field_json(F.get());
  out["prime"] = poly_json(P.pi());
  out["i"] = i;
  out["y"] = zp_json(y);
  out["prec"] = M;
  out["method"] = method;
  if (method != "exact") out["xdeg"] = D;
  out["coefficients"] = lseries_json(c);
  if (both) out["agree"] = agree;
  if (special) {
    LSpecial sp = method == "direct" ? lfunction_special_direct(&P, i, y, M, D, o.threads)
                                     : lfunction_special(&P, i, y, M);
    out["value_at_one"] = padic_json(sp.value_at_one);
    out["derivative_at_one"] = padic_json(sp.derivative_at_one);
  }
  if (o.json) {
    emit(out);
  } else {
    for (std::size_t k = 0; k < c.size(); ++k)
      std::cout << "L[" << k << "] = " << padic_text(c[k]) << "\n";
    if (special)
      std::cout << "L(1) = " << padic_text(padic_from_json(&P, out["value_at_one"]))
                << "\nL'(1) = " << padic_text(padic_from_json(&P, out["derivative_at_one"]))
                << "\n";
    if (both) std::cout << "paths agree: " << (agree ? "yes" : "no") << "\n";
  }
  return both && !agree ? 1 : 0;
}

int cmd_stickelberger(const Opts& o, int n, long long i, int D, bool sharp) {
  std::unique_ptr<Fq> F = make_field(o);
  PrimeCtx P(F.get(), make_prime_poly(F.get(), o));
  Tower tw(&P);
  if (D < 0) D = Tower::default_window(&P, n);
  json out;
  out["field"] = field_json(F.get());
  out["prime"] = poly_json(P.pi());
  ThetaSeries th = theta_series(tw, n, i, D);
  out["theta"] = theta_json(th);
  out["window_ok"] = theta_window_ok(th);
  if (sharp) out["sharp"] = groupring_json(theta_sharp_at_one(tw, n, i, D));
  if (o.json) {
    emit(out);
  } else {
    for (int k = 0; k <= D; ++k)
      std::cout << "theta[" << k << "] = " << gr_text(th.coeff[k]) << "\n";
    std::cout << "window clear: " << (theta_window_ok(th) ? "yes" : "no") << "\n";
    if (sharp)
      std::cout << "sharp(1) = "
                << gr_text(groupring_from_json(&tw.level(n), out["sharp"])) << "\n";
  }
  return 0;
}

int cmd_sinnott(const Opts& o, int n, long long i, bool has_i, int D, bool witness) {
  std::unique_ptr<Fq> F = make_field(o);
  PrimeCtx P(F.get(), make_prime_poly(F.get(), o));
  Tower tw(&P);
  if (witness) {
    GroupRingElem w = kernel_witness(tw, n);
    bool killed = dirfunction_zero(sinnott_map(w));
    if (o.json) {
      json out;
      out["field"] = field_json(F.get());
      out["prime"] = poly_json(P.pi());
      out["level"] = n;
      out["witness"] = groupring_json(w);
      out["mapped_zero"] = killed;
      emit(out);
    } else {
      std::cout << "witness = " << gr_text(w) << "\n"
                << "mapped to zero: " << (killed ? "yes" : "no") << "\n";
    }
    return killed ? 0 : 1;
  }
  if (!has_i) throw precondition_error("sinnott: --i is required without --witness");
  StickLfunReport rep = stick_lfun_check(tw, i, n, D);
  if (o.json) {
    json out;
    out["field"] = field_json(F.get());
    out["prime"] = poly_json(P.pi());
    out["level"] = n;
    out["i"] = i;
    out["ok"] = rep.ok;
    out["cases"] = rep.cases;
    out["mismatches"] = rep.mismatches;
    emit(out);
  } else {
    std::cout << "compared " << rep.cases << " coefficients, " << rep.mismatches
              << " mismatches\n"
              << (rep.ok ? "ok" : "FAILED") << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_invariants(const Opts& o, long long i, int seed, int mcap, int nmax) {
  std::unique_ptr<Fq> F = make_field(o);
  PrimeCtx P(F.get(), make_prime_poly(F.get(), o));
  MInvariant mi = m_invariant(&P, i, seed, mcap);
  bool cert = mi.resolved && verify_m_certificate(&P, mi, o.threads);
  Tower tw(&P);
  NInvariant ni = n_invariant(tw, i, nmax);
  bool ineq = mi.resolved && ni.found && ni.n <= mi.value;
  if (o.json) {
    json out;
    out["field"] = field_json(F.get());
    out["prime"] = poly_json(P.pi());
    out["m"] = minvariant_json(mi);
    out["certificate_ok"] = cert;
    out["n"] = json{{"found", ni.found}, {"n", ni.n}};
    out["inequality_ok"] = ineq;
    emit(out);
  } else {
    if (mi.resolved)
      std::cout << "m(" << i << ") = " << mi.value << "  (precision " << mi.M
                << ", witness y=" << mi.witness_y << " j=" << mi.witness_j << ")\n"
                << "certificate: " << (cert ? "ok" : "FAILED") << "\n";
    else
      std::cout << "m(" << i << ") unresolved at precision cap " << mi.M << "\n";
    if (ni.found)
      std::cout << "N(" << i << ") = " << ni.n << "\n";
    else
      std::cout << "N(" << i << ") not found below level " << nmax + 1 << "\n";
    if (mi.resolved && ni.found)
      std::cout << "N <= m: " << (ineq ? "yes" : "no") << "\n";
  }
  if (!mi.resolved) return 4;
  return cert && ineq ? 0 : 1;
}

int cmd_verify(const Opts& o, const std::string& suite) {
  std::vector<SuiteResult> results;
  if (suite == "all") {
    results = run_all(o.threads);
  } else {
    results.push_back(run_suite(suite, o.threads));
  }
  long long failed = 0;
  for (const SuiteResult& r : results) failed += r.failed;
  if (o.json) {
    json out;
    out["ok"] = failed == 0;
    out["suites"] = json::array();
    for (const SuiteResult& r : results) {
      json s;
      s["suite"] = r.suite;
      s["cases"] = r.cases;
      s["failed"] = r.failed;
      s["failures"] = json::array();
      for (const CaseResult& f : r.failures)
        s["failures"].push_back(json{{"name", f.name}, {"detail", f.detail}});
      out["suites"].push_back(s);
    }
    emit(out);
  } else {
    for (const SuiteResult& r : results) {
      std::cout << "suite " << r.suite << ": " << r.cases << " cases, " << r.failed
                << " failed\n";
      for (const CaseResult& f : r.failures)
        std::cout << "  FAIL " << f.name << (f.detail.empty() ? "" : "  " + f.detail)
                  << "\n";
    }
    std::cout << (failed == 0 ? "verify: OK" : "verify: FAILED") << "\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Carlitz-Goss arithmetic at one prime of F_q[t]"};
  app.set_config("--config");
  app.require_subcommand(1);

  Opts o;
  app.add_option("--p", o.p, "characteristic (odd prime)")->capture_default_str();
  app.add_option("--e", o.e, "field degree over F_p")->capture_default_str();
  app.add_option("--modulus", o.modulus,
                 "defining modulus of F_q, little-endian codes (e > 1)")
      ->delimiter(',');
  app.add_option("--prime", o.prime, "monic irreducible pi, little-endian codes")
      ->delimiter(',')
      ->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads")->capture_default_str();
  app.add_flag("--json", o.json, "canonical JSON on stdout");

  long long jmax = 20, jonly = 0, i = 1, y0 = 0;
  int xpow = 1, ydigits = 6, M = 2, D = 6, target = 8;
  int st_level = 0, st_D = -1, sn_level = 1, sn_D = -1;
  int seed = -1, mcap = 64, nmax = 3;
  bool at_one = false, infty = false, ynegate = false, special = false, sharp = false;
  bool witness = false;
  std::string method = "exact", suite = "all";

  CLI::App* cb = app.add_subcommand("bernoulli", "Bernoulli-Goss values beta(j)");
  cb->fallthrough();
  CLI::Option* optj = cb->add_option("--j", jonly, "single index");
  cb->add_option("--jmax", jmax, "table 0..jmax")->capture_default_str()->excludes(optj);

  CLI::App* cz = app.add_subcommand("zeta", "Goss zeta: exact Z(X, j) or the series at infinity");
  cz->fallthrough();
  cz->add_option("--j", jonly, "exponent for the exact polynomial");
  cz->add_flag("--at-one", at_one, "also evaluate at X = 1");
  cz->add_flag("--infty", infty, "evaluate the two-variable series at x = t^xpow");
  cz->add_option("--xpow", xpow, "power of t used as x")->capture_default_str();
  cz->add_option("--y", y0, "p-adic exponent value")->capture_default_str();
  cz->add_flag("--ynegate", ynegate, "negate the exponent");
  cz->add_option("--ydigits", ydigits, "significant base-p digits of y")->capture_default_str();
  cz->add_option("--target", target, "absolute precision in 1/t")->capture_default_str();

  CLI::App* cl = app.add_subcommand("lfunction", "pi-adic L-series coefficients");
  cl->fallthrough();
  cl->add_option("--i", i, "residue character index")->required();
  cl->add_option("--y", y0, "p-adic exponent value")->capture_default_str();
  cl->add_flag("--ynegate", ynegate, "negate the exponent");
  cl->add_option("--ydigits", ydigits, "significant base-p digits of y")->capture_default_str();
  cl->add_option("--prec", M, "pi-adic precision")->capture_default_str();
  cl->add_option("--xdeg", D, "truncation degree for the direct path")->capture_default_str();
  cl->add_option("--method", method, "exact | direct | both")
      ->check(CLI::IsMember({"exact", "direct", "both"}))
      ->capture_default_str();
  cl->add_flag("--special", special, "value and X-derivative at X = 1");

  CLI::App* cs = app.add_subcommand("stickelberger", "group-ring Stickelberger series");
  cs->fallthrough();
  cs->add_option("--level", st_level, "tower level n")->capture_default_str();
  cs->add_option("--i", i, "residue character index")->required();
  cs->add_option("--xdeg", st_D, "truncation; -1 takes the default window")
      ->capture_default_str();
  cs->add_flag("--sharp", sharp, "sharpened value at X = 1");

  CLI::App* cn = app.add_subcommand("sinnott", "interpolation map: cross-check and kernel");
  cn->fallthrough();
  cn->add_option("--level", sn_level, "tower level n")->capture_default_str();
  CLI::Option* opti = cn->add_option("--i", i, "residue character index");
  cn->add_option("--xdeg", sn_D, "truncation; -1 takes the default window")
      ->capture_default_str();
  cn->add_flag("--witness", witness, "emit a nonzero kernel element")->excludes(opti);

  CLI::App* ci = app.add_subcommand("invariants", "m and N at one character index");
  ci->fallthrough();
  ci->add_option("--i", i, "residue character index")->required();
  ci->add_option("--prec-seed", seed, "starting precision; -1 uses the estimate")
      ->capture_default_str();
  ci->add_option("--mcap", mcap, "precision cap")->capture_default_str();
  ci->add_option("--nmax", nmax, "deepest tower level tried")->capture_default_str();

  CLI::App* cv = app.add_subcommand("verify", "run a verification suite");
  cv->fallthrough();
  cv->add_option("--suite", suite, "simon | beta | interp | stick | sinnott | invariant | all")
      ->check(CLI::IsMember({"simon", "beta", "interp", "stick", "sinnott", "invariant", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& ex) {
    int rc = app.exit(ex);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (cb->parsed()) return cmd_bernoulli(o, jmax, jonly, optj->count() == 0);
    if (cz->parsed())
      return cmd_zeta(o, jonly, at_one, infty, xpow, y0, ynegate, ydigits, target);
    if (cl->parsed())
      return cmd_lfunction(o, i, y0, ynegate, ydigits, M, D, method, special);
    if (cs->parsed()) return cmd_stickelberger(o, st_level, i, st_D, sharp);
    if (cn->parsed()) return cmd_sinnott(o, sn_level, i, opti->count() > 0, sn_D, witness);
    if (ci->parsed()) return cmd_invariants(o, i, seed, mcap, nmax);
    if (cv->parsed()) return cmd_verify(o, suite);
  } catch (const precondition_error& ex) {
    std::cerr << "precondition: " << ex.what() << "\n";
    return 2;
  } catch (const guard_error& ex) {
    std::cerr << "guard: " << ex.what() << "\n";
    return 3;
  }
  return 0;
}
