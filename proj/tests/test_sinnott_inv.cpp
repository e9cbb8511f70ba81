#include "doctest.h"

#include "carlgoss/invariants.hpp"
#include "carlgoss/sinnott.hpp"

using namespace carlgoss;

namespace {

Poly mk(const Fq* F, std::vector<fq_code> c) { return Poly(F, std::move(c)); }

}  // namespace

TEST_CASE("digit window per level") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  CHECK(sinnott_digits(&P, 0) == 0);
  CHECK(sinnott_digits(&P, 1) == 1);
  CHECK(sinnott_digits(&P, 2) == 1);
  CHECK(sinnott_digits(&P, 3) == 2);
  CHECK(sinnott_digits(&P, 8) == 2);
  CHECK(sinnott_digits(&P, 9) == 3);
}

TEST_CASE("map of a single group element, pi = t, level one") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  Tower tw(&P);
  const GammaLevel& G = tw.level(1);

  GroupRingElem lam(&G);
  lam.set_coeff(1, 1);  // [1+t]
  DirFunction f = sinnott_map(lam);
  CHECK(f.n == 1);
  CHECK(f.m == 1);
  REQUIRE(f.table.size() == 3);
  CHECK(f.table[0].rep().is_one());
  CHECK(f.table[1].rep() == mk(&F, {1, 1}));
  CHECK(f.table[2].rep() == mk(&F, {1, 2}));

  GroupRingElem lam2(&G);
  lam2.set_coeff(2, 2);  // 2[1+2t]
  DirFunction g = sinnott_map(lam2);
  CHECK(g.table[0].rep() == Poly::constant(&F, 2));
  CHECK(g.table[1].rep() == mk(&F, {2, 1}));
  CHECK(g.table[2].rep() == mk(&F, {2, 2}));

  // the coefficient lift is a ring map, so the whole thing is additive
  DirFunction s = sinnott_map(lam + lam2);
  for (int y = 0; y < 3; ++y) CHECK(s.table[y] == f.table[y] + g.table[y]);

  CHECK(dirfunction_zero(sinnott_map(norm_element(&G))));
  CHECK_FALSE(dirfunction_zero(f));
}

TEST_CASE("kernel witnesses, frozen supports") {
  Fq F3(3, 1);
  PrimeCtx P3(&F3, Poly::variable(&F3));
  Tower tw3(&P3);
  GroupRingElem w1 = kernel_witness(tw3, 1);
  CHECK(w1 == norm_element(&tw3.level(1)));
  CHECK(dirfunction_zero(sinnott_map(w1)));

  GroupRingElem w2 = kernel_witness(tw3, 2);
  CHECK(w2.coeff(0) == 1);
  CHECK(w2.coeff(3) == 1);  // 1 + t^2 sits at digit word 0 + 1*3
  CHECK(w2.coeff(6) == 1);
  int support = 0;
  for (int k = 0; k < 9; ++k) support += w2.coeff(k) != 0 ? 1 : 0;
  CHECK(support == 3);
  CHECK(dirfunction_zero(sinnott_map(w2)));

  Fq F5(5, 1);
  PrimeCtx P5(&F5, Poly::variable(&F5));
  Tower tw5(&P5);
  GroupRingElem v = kernel_witness(tw5, 1);
  CHECK(v.coeff(0) == 1);
  CHECK(v.coeff(1) == 3);
  CHECK(v.coeff(2) == 1);
  CHECK(dirfunction_zero(sinnott_map(v)));
  CHECK_THROWS_AS(kernel_witness(tw5, 0), precondition_error);
}

TEST_CASE("mapped theta coefficients equal the exact L coefficients") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  Tower tw(&P);
  for (int n = 0; n <= 1; ++n) {
    StickLfunReport rep = stick_lfun_check(tw, 1, n);
    CHECK(rep.ok);
    CHECK(rep.cases > 0);
    CHECK(rep.mismatches == 0);
  }
}

TEST_CASE("m at the base odd index, pi = t") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  MInvariant mi = m_invariant(&P, 1);
  CHECK(mi.resolved);
  CHECK(mi.value == 0);
  CHECK_FALSE(mi.forced);
  CHECK(mi.m == 1);
  REQUIRE(mi.rows.size() == 3);
  // class y = 1 routes through the exponent 1 itself
  CHECK(mi.rows[1].j == 1);
  CHECK(mi.rows[1].v == 0);
  CHECK_FALSE(mi.rows[1].floor);
  CHECK(verify_m_certificate(&P, mi, 2));
  CHECK(m_degree_bound_check(&P, mi));

  Tower tw(&P);
  InequalityRow row = inequality_report(tw, 1, 3);
  CHECK(row.ok);
  CHECK(row.n_found);
  CHECK(row.n_value == 0);
  CHECK(row.m.value == 0);

  CHECK_THROWS_AS(m_invariant(&P, 0), precondition_error);
  CHECK_THROWS_AS(m_invariant(&P, 2), precondition_error);  // 2 == 0 mod q^d - 1
}

TEST_CASE("m in the quadratic residue field resolves and certifies") {
  Fq F(3, 1);
  PrimeCtx P(&F, mk(&F, {1, 0, 1}));
  MInvariant mi = m_invariant(&P, 1);
  CHECK(mi.resolved);
  CHECK_FALSE(mi.forced);
  CHECK(verify_m_certificate(&P, mi, 2));
  CHECK(m_degree_bound_check(&P, mi));
  MInvariant even = m_invariant(&P, 2);
  CHECK(even.forced);
  CHECK(even.resolved);
  CHECK(verify_m_certificate(&P, even, 2));
}
