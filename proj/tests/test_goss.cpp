#include "doctest.h"

#include "carlgoss/lfunction.hpp"
#include "carlgoss/powersums.hpp"
#include "carlgoss/prime.hpp"

using namespace carlgoss;

namespace {

Poly mk(const Fq* F, std::vector<fq_code> c) { return Poly(F, std::move(c)); }

}  // namespace

TEST_CASE("power sums over degree one, q = 3") {
  Fq F(3, 1);
  CHECK(power_sum(&F, 0, 0) == Poly::constant(&F, 1));
  CHECK(power_sum(&F, 0, 7) == Poly::constant(&F, 1));
  CHECK(power_sum(&F, 1, 0).zero());  // q^n terms of 1
  CHECK(power_sum(&F, 1, 1).zero());
  CHECK(power_sum(&F, 1, 2) == Poly::constant(&F, 2));
  CHECK(power_sum(&F, 1, 3).zero());
  CHECK(power_sum(&F, 1, 4) == Poly::constant(&F, 2));
  CHECK(power_sum(&F, 1, 5) == mk(&F, {0, 1, 0, 2}));  // t + 2t^3
}

TEST_CASE("power sums vanish below the first threshold") {
  Fq F(3, 1);
  for (long long j = 1; j < 8; ++j) CHECK(power_sum(&F, 2, j).zero());
  CHECK_FALSE(power_sum(&F, 2, 8).zero());
  Fq F5(5, 1);
  for (long long j = 1; j < 4; ++j) CHECK(power_sum(&F5, 1, j).zero());
  CHECK_FALSE(power_sum(&F5, 1, 4).zero());
}

TEST_CASE("sweep agrees with single powers and is thread-stable") {
  Fq F(3, 1);
  for (int n = 0; n <= 2; ++n) {
    std::vector<Poly> one = power_sum_sweep(&F, n, 12, 1);
    std::vector<Poly> four = power_sum_sweep(&F, n, 12, 4);
    REQUIRE(one.size() == 13);
    for (long long j = 0; j <= 12; ++j) {
      CHECK(one[j] == power_sum(&F, n, j));
      CHECK(one[j] == four[j]);
    }
  }
}

TEST_CASE("zeta polynomial, degree bound, value at one") {
  Fq F(3, 1);
  CHECK(zeta_degree_bound(&F, 0) == 0);
  CHECK(zeta_degree_bound(&F, 2) == 1);
  CHECK(zeta_degree_bound(&F, 7) == 1);
  CHECK(zeta_degree_bound(&F, 8) == 2);
  CHECK(zeta_degree_bound(&F, 26) == 3);

  std::vector<Poly> z0 = zeta_polynomial(&F, 0);
  REQUIRE(z0.size() == 1);
  CHECK(z0[0].is_one());

  std::vector<Poly> z2 = zeta_polynomial(&F, 2);
  REQUIRE(z2.size() == 2);
  CHECK(z2[0].is_one());
  CHECK(z2[1] == Poly::constant(&F, 2));
  CHECK(zeta_at_one(&F, 2).zero());  // 2 is a forced class

  CHECK(zeta_at_one(&F, 5) == mk(&F, {1, 1, 0, 2}));
}

TEST_CASE("bernoulli values, small q = 3 oracle") {
  Fq F(3, 1);
  CHECK(bernoulli_goss(&F, 0).is_one());
  CHECK(bernoulli_goss(&F, 2).is_one());  // forced class, derivative kicks in
  CHECK(bernoulli_goss(&F, 3).is_one());
  CHECK(bernoulli_goss(&F, 4).is_one());
  CHECK(bernoulli_goss(&F, 5) == mk(&F, {1, 1, 0, 2}));
  std::vector<Poly> table = bernoulli_table(&F, 20, 2);
  REQUIRE(table.size() == 21);
  for (long long j = 0; j <= 20; ++j) CHECK(table[j] == bernoulli_goss(&F, j));
}

TEST_CASE("power sums reduced mod pi agree with the exact ones") {
  Fq F(3, 1);
  for (auto pim : {std::vector<fq_code>{0, 1}, std::vector<fq_code>{1, 0, 1}}) {
    PrimeCtx P(&F, Poly(&F, pim));
    for (int n = 0; n <= 2; ++n)
      for (long long j : {1LL, 5LL, 9LL}) {
        PadicElem a = power_sum_mod(&P, n, j, 3);
        CHECK(a.rep() == P.reduce(power_sum(&F, n, j), 3));
      }
  }
}

TEST_CASE("exact L series at the base point, pi = t") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  ZpApprox y = ZpApprox::integer(3, 1, 2);
  CHECK(lfunction_crt_exponent(&P, 1, y, 4) == 1);
  std::vector<PadicElem> c = lfunction_exact(&P, 1, y, 4);
  REQUIRE(c.size() == 2);  // 1 - tX
  CHECK(c[0].rep().is_one());
  CHECK(c[1].rep() == mk(&F, {0, 2}));
  // the trivial character at y = 0 routes through the least positive exponent
  CHECK(lfunction_crt_exponent(&P, 0, ZpApprox(3, 0, 2), 4) == 18);
}

TEST_CASE("direct enumeration matches the exact path") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  ZpApprox y = ZpApprox::integer(3, 1, 2);
  std::vector<PadicElem> ex = lfunction_exact(&P, 1, y, 4);
  std::vector<PadicElem> di = lfunction_direct(&P, 1, y, 4, 6, 2);
  REQUIRE(di.size() >= ex.size());
  for (std::size_t k = 0; k < di.size(); ++k) {
    if (k < ex.size())
      CHECK(di[k] == ex[k]);
    else
      CHECK(di[k].zero_rep());
  }

  PrimeCtx P2(&F, mk(&F, {1, 0, 1}));
  ZpApprox y3 = ZpApprox::integer(3, 3, 2);
  std::vector<PadicElem> ex2 = lfunction_exact(&P2, 3, y3, 3);
  std::vector<PadicElem> di2 = lfunction_direct(&P2, 3, y3, 3, 6, 2);
  for (std::size_t k = 0; k < std::max(ex2.size(), di2.size()); ++k) {
    PadicElem a = k < ex2.size() ? ex2[k] : PadicElem(&P2, Poly(&F), 3);
    PadicElem b = k < di2.size() ? di2[k] : PadicElem(&P2, Poly(&F), 3);
    CHECK(a == b);
  }
}

TEST_CASE("special values at X = 1") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  // 1 - tX at X = 1, and its derivative
  LSpecial sp = lfunction_special(&P, 1, ZpApprox::integer(3, 1, 2), 4);
  CHECK(sp.value_at_one.rep() == mk(&F, {1, 2}));
  CHECK(sp.derivative_at_one.rep() == mk(&F, {0, 2}));
  LSpecial spd = lfunction_special_direct(&P, 1, ZpApprox::integer(3, 1, 2), 4, 6, 2);
  CHECK(spd.value_at_one == sp.value_at_one);
  CHECK(spd.derivative_at_one == sp.derivative_at_one);
  // the trivial character vanishes at 1 for every exponent
  for (long long y0 = 0; y0 < 9; ++y0)
    CHECK(lfunction_special(&P, 0, ZpApprox(3, y0, 2), 4).value_at_one.zero_rep());
}

TEST_CASE("zeta at infinity specializes to Z(1, j)") {
  Fq F(3, 1);
  for (long long j = 0; j <= 6; ++j) {
    LaurentElem x = LaurentElem::t_power(&F, static_cast<int>(j));
    ZpApprox y = ZpApprox::integer(3, j, 5).negated();
    LaurentElem diff = zeta_infty(x, y, 10) - LaurentElem::from_poly(zeta_at_one(&F, j));
    auto v = diff.valuation();
    CHECK(v.floor);
    CHECK(v.v >= 10);
  }
}

TEST_CASE("zeta at infinity inside the open disk") {
  Fq F(3, 1);
  // x = 1/t, exponent -2: blocks are 1, 2/t^2, 0, ... so the value is 1 + 2/t^3
  LaurentElem x = LaurentElem::t_power(&F, -1);
  LaurentElem z = zeta_infty(x, ZpApprox::integer(3, 2, 3).negated(), 10);
  CHECK(z.coeff_at(0) == 1);
  CHECK(z.coeff_at(3) == 2);
  for (int k : {1, 2, 4, 5, 6, 7, 8, 9}) CHECK(z.coeff_at(k) == 0);
  // block-level growth of the valuation
  for (int n = 1; n <= 3; ++n) {
    int bound = 1;
    for (int k = 1; k < n; ++k) bound *= 3;
    LaurentElem b = zeta_infty_block(&F, n, ZpApprox(3, 7, 3), bound + 2);
    auto v = b.valuation();
    CHECK(v.v >= bound);
  }
  CHECK_THROWS_AS(zeta_infty(LaurentElem::exact_zero(&F), ZpApprox(3, 0, 2), 4),
                  precondition_error);
}

TEST_CASE("euler product certificate at infinity") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  LaurentElem x = LaurentElem::t_power(&F, 2);
  InterpReport r = infinity_interpolation_check(&P, x, ZpApprox(3, 5, 3), 6, 8);
  CHECK(r.ok);
  CHECK(r.certified == 8);
  // the factor tail caps the certificate at (D+1) |v(x)|
  InterpReport r2 = infinity_interpolation_check(&P, x, ZpApprox(3, 5, 3), 6, 20);
  CHECK(r2.ok);
  CHECK(r2.certified == 14);
  // |x| <= 1 has no certificate at all
  CHECK_THROWS_AS(
      infinity_interpolation_check(&P, LaurentElem::t_power(&F, 0), ZpApprox(3, 1, 2), 6, 8),
      precondition_error);
}
