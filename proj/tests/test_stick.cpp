#include "doctest.h"

#include "carlgoss/theta.hpp"

using namespace carlgoss;

namespace {

Poly mk(const Fq* F, std::vector<fq_code> c) { return Poly(F, std::move(c)); }

}  // namespace

TEST_CASE("gamma level one at pi = t is cyclic of order 3") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  GammaLevel G(&P, 1);
  CHECK(G.size() == 3);
  CHECK(G.rep_of(0).is_one());
  CHECK(G.rep_of(1) == mk(&F, {1, 1}));
  CHECK(G.rep_of(2) == mk(&F, {1, 2}));
  CHECK(G.index_of(mk(&F, {1, 1})) == 1);
  CHECK(G.index_of(mk(&F, {1, 2, 1})) == 2);  // (1+t)^2 before reduction
  CHECK(G.mul(1, 1) == 2);
  CHECK(G.mul(1, 2) == 0);
  CHECK(G.inv(0) == 0);
  CHECK(G.inv(1) == 2);
  CHECK_THROWS_AS(G.index_of(Poly::variable(&F)), precondition_error);
}

TEST_CASE("gamma level two and the projection to level one") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  GammaLevel G2(&P, 2);
  GammaLevel G1(&P, 1);
  CHECK(G2.size() == 9);
  // (1+t)^2 = 1+2t+t^2, whose digit word is 2+1*3
  CHECK(G2.mul(1, 1) == 5);
  CHECK(G2.mul(1, G2.inv(1)) == 0);
  std::vector<int> down = projection_indices(G2, G1);
  REQUIRE(down.size() == 9);
  for (int k = 0; k < 9; ++k) CHECK(down[k] == k % 3);
}

TEST_CASE("group ring arithmetic") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  GammaLevel G(&P, 1);
  GroupRingElem a(&G), b(&G);
  a.set_coeff(1, 1);
  a.set_coeff(2, 2);  // [1] + 2[2]
  b.set_coeff(1, 1);  // [1]
  GroupRingElem c = a * b;  // [2] + 2[0]
  CHECK(c.coeff(0) == 2);
  CHECK(c.coeff(1) == 0);
  CHECK(c.coeff(2) == 1);
  CHECK(a.scaled(2).coeff(2) == 1);
  GroupRingElem n = norm_element(&G);
  CHECK(n.translated(1) == n);
  CHECK((n + n + n).zero());
  GroupRingElem d(&G);
  add_scaled_translate(d, a, 1, 2);  // 2[1]([1] + 2[2]) = 2[2] + [0]
  CHECK(d.coeff(0) == 1);
  CHECK(d.coeff(2) == 2);
}

TEST_CASE("frobenius data of the degree-one primes at pi = t") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  GammaLevel G(&P, 1);
  FrobData a = frobenius_decompose(&P, G, mk(&F, {1, 1}));  // t+1
  CHECK(a.delta == 1);
  CHECK(a.gamma == 1);  // <t+1> = 1+t
  FrobData b = frobenius_decompose(&P, G, mk(&F, {2, 1}));  // t+2
  CHECK(b.delta == 2);
  CHECK(b.gamma == 2);  // <t+2> = 2(t+2) = 1+2t
  CHECK_THROWS_AS(frobenius_decompose(&P, G, Poly::variable(&F)), precondition_error);
}

TEST_CASE("theta at level zero, pi = t: the product collapses to 1") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  Tower tw(&P);
  ThetaSeries th = theta_series(tw, 0, 1, 3);
  const GammaLevel& G0 = tw.level(0);
  CHECK(th.coeff[0] == GroupRingElem::unit(&G0));
  for (int k = 1; k <= 3; ++k) CHECK(th.coeff[k].zero());
  CHECK(theta_window_ok(th));
  GroupRingElem sharp = theta_sharp_at_one(tw, 0, 1);
  CHECK(sharp.coeff(0) == 1);
  NInvariant ni = n_invariant(tw, 1, 3);
  CHECK(ni.found);
  CHECK(ni.n == 0);
}

TEST_CASE("theta at level one, pi = t: frozen linear coefficient") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  Tower tw(&P);
  int D = Tower::default_window(&P, 1);
  CHECK(D == 4);
  ThetaSeries th = theta_series(tw, 1, 1, D);
  CHECK(th.coeff[0] == GroupRingElem::unit(&tw.level(1)));
  // X coefficient picks up the two degree-one primes: 1*[inv(1+t)] + 2*[inv(1+2t)]
  CHECK(th.coeff[1].coeff(0) == 0);
  CHECK(th.coeff[1].coeff(1) == 2);
  CHECK(th.coeff[1].coeff(2) == 1);
  CHECK(theta_window_ok(th));
  GroupRingElem sharp = theta_sharp_at_one(tw, 1, 1);
  CHECK(sharp.coeff(0) == 1);
  CHECK(sharp.coeff(1) == 2);
  CHECK(sharp.coeff(2) == 1);
  // indices congruent mod q^d - 1 name the same character
  ThetaSeries th3 = theta_series(tw, 1, 3, D);
  for (int k = 0; k <= D; ++k) CHECK(th3.coeff[k] == th.coeff[k]);
}

TEST_CASE("tower projection collapses level one onto level zero") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  Tower tw(&P);
  int D = Tower::default_window(&P, 1);
  ThetaSeries hi = theta_series(tw, 1, 1, D);
  ThetaSeries lo = theta_series(tw, 0, 1, D);
  ThetaSeries down = project_theta(tw, hi, 0);
  REQUIRE(down.coeff.size() == lo.coeff.size());
  for (int k = 0; k <= D; ++k) CHECK(down.coeff[k] == lo.coeff[k]);
}

TEST_CASE("sharp value rejects the trivial character") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  Tower tw(&P);
  CHECK_THROWS_AS(theta_sharp_at_one(tw, 0, 0), precondition_error);
  // 2 == 0 mod q^d - 1, so it is the trivial character again
  CHECK_THROWS_AS(theta_sharp_at_one(tw, 0, 2), precondition_error);
}

TEST_CASE("theta structure in the quadratic residue field") {
  Fq F(3, 1);
  PrimeCtx P(&F, mk(&F, {1, 0, 1}));  // pi = t^2+1, d = 2
  Tower tw(&P);
  int D = Tower::default_window(&P, 0);
  CHECK(D == 4);
  for (long long i = 1; i < 8; ++i) {
    ThetaSeries th = theta_series(tw, 0, i, D);
    CHECK(th.coeff[0] == GroupRingElem::unit(&tw.level(0)));
    CHECK(theta_window_ok(th));
  }
  // even characters: the plain value at 1 dies and the quotient is exact
  for (long long i : {2LL, 4LL, 6LL}) CHECK_NOTHROW(theta_sharp_at_one(tw, 0, i));
}
