#include "doctest.h"

#include <random>

#include "carlgoss/carlitz.hpp"
#include "carlgoss/poly.hpp"
#include "carlgoss/prime.hpp"

using namespace carlgoss;

namespace {

Poly mk(const Fq* F, std::vector<fq_code> c) { return Poly(F, std::move(c)); }

Poly random_poly(const Fq* F, int max_deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<int> code(0, F->q() - 1);
  int d = deg(rng);
  std::vector<fq_code> c(d + 1);
  for (auto& x : c) x = static_cast<fq_code>(code(rng));
  return Poly(F, std::move(c));
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  Fq F(3, 1);
  CHECK(F.q() == 3);
  CHECK(F.add(2, 2) == 1);
  CHECK(F.mul(2, 2) == 1);
  CHECK(F.inv(2) == 2);
  CHECK(F.pow(2, -1) == 2);
  CHECK(F.neg(1) == 2);
  CHECK_THROWS_AS(F.inv(0), precondition_error);
  CHECK_THROWS_AS(Fq(4, 1), precondition_error);
  CHECK_THROWS_AS(Fq(2, 1), precondition_error);
}

TEST_CASE("extension field F_9 with modulus u^2+1") {
  Fq F(3, 2, {1, 0, 1});
  CHECK(F.q() == 9);
  fq_code u = F.from_coords({0, 1});
  CHECK(u == 3);
  CHECK(F.mul(u, u) == 2);  // u^2 = -1
  CHECK(F.pow(u, 4) == 1);
  for (int a = 1; a < 9; ++a)
    CHECK(F.mul(static_cast<fq_code>(a), F.inv(static_cast<fq_code>(a))) == 1);
  // u^2+2 = (u+1)(u+2) is not a valid modulus
  CHECK_THROWS_AS(Fq(3, 2, {2, 0, 1}), precondition_error);
}

TEST_CASE("polynomial product over F_3") {
  Fq F(3, 1);
  Poly a = mk(&F, {1, 1});  // t+1
  Poly b = mk(&F, {2, 1});  // t+2
  CHECK(a * b == mk(&F, {2, 0, 1}));  // t^2+2
  CHECK((a - a).zero());
  CHECK(a.pow(0).is_one());
}

TEST_CASE("division, gcd, extended gcd") {
  Fq F(3, 1);
  Poly a = mk(&F, {1, 0, 1});  // t^2+1
  Poly t = Poly::variable(&F);
  CHECK(gcd_monic(a, t).is_one());
  auto [q, r] = divrem(a, t);
  CHECK(q == t);
  CHECK(r == Poly::constant(&F, 1));
  std::mt19937_64 rng(42);
  for (int it = 0; it < 50; ++it) {
    Poly x = random_poly(&F, 6, rng), y = random_poly(&F, 6, rng);
    if (y.zero()) continue;
    auto [qq, rr] = divrem(x, y);
    CHECK(qq * y + rr == x);
    CHECK(rr.degree() < y.degree());
    ExtGcd g = ext_gcd(x, y);
    CHECK(g.u * x + g.v * y == g.g);
    CHECK(g.g == gcd_monic(x, y));
  }
}

TEST_CASE("irreducibility over F_3") {
  Fq F(3, 1);
  CHECK(is_irreducible(mk(&F, {1, 0, 1})));      // t^2+1
  CHECK_FALSE(is_irreducible(mk(&F, {2, 0, 1})));  // t^2+2 = (t+1)(t+2)
  CHECK(is_irreducible(Poly::variable(&F)));
  CHECK_FALSE(is_irreducible(Poly::constant(&F, 2)));
  CHECK_THROWS_AS(is_irreducible(Poly(&F)), precondition_error);
}

TEST_CASE("monic enumeration order") {
  Fq F(3, 1);
  auto m2 = monic_polys(&F, 2);
  REQUIRE(m2.size() == 9);
  CHECK(m2[0] == mk(&F, {0, 0, 1}));
  CHECK(m2[1] == mk(&F, {0, 1, 1}));
  CHECK(m2[2] == mk(&F, {0, 2, 1}));
  CHECK(m2[3] == mk(&F, {1, 0, 1}));
  auto m0 = monic_polys(&F, 0);
  REQUIRE(m0.size() == 1);
  CHECK(m0[0].is_one());
}

TEST_CASE("monic irreducibles: list and counts") {
  Fq F(3, 1);
  auto irr = monic_irreducibles(&F, 3);
  std::vector<Poly> deg1(irr.begin(), irr.begin() + 3);
  CHECK(deg1[0] == Poly::variable(&F));
  CHECK(deg1[1] == mk(&F, {1, 1}));
  CHECK(deg1[2] == mk(&F, {2, 1}));
  int c1 = 0, c2 = 0, c3 = 0;
  for (const auto& f : irr) {
    if (f.degree() == 1) ++c1;
    if (f.degree() == 2) ++c2;
    if (f.degree() == 3) ++c3;
  }
  CHECK(c1 == 3);
  CHECK(c2 == 3);  // (9-3)/2
  CHECK(c3 == 8);  // (27-3)/3
  // degree-2 list, sorted
  CHECK(irr[3] == mk(&F, {1, 0, 1}));
  CHECK(irr[4] == mk(&F, {2, 1, 1}));
  CHECK(irr[5] == mk(&F, {2, 2, 1}));
}

TEST_CASE("necklace counts for q = 5") {
  Fq F(5, 1);
  auto irr = monic_irreducibles(&F, 3);
  int c2 = 0, c3 = 0;
  for (const auto& f : irr) {
    if (f.degree() == 2) ++c2;
    if (f.degree() == 3) ++c3;
  }
  CHECK(c2 == 10);  // (25-5)/2
  CHECK(c3 == 40);  // (125-5)/3
}

TEST_CASE("carlitz action on t and t^2") {
  Fq F(3, 1);
  Poly t = Poly::variable(&F);
  AdditivePoly phi_t = carlitz_action(t);
  REQUIRE(phi_t.tau_degree() == 1);
  CHECK(phi_t.tau_coeff(0) == t);
  CHECK(phi_t.tau_coeff(1).is_one());

  AdditivePoly phi_t2 = carlitz_action(t * t);
  REQUIRE(phi_t2.tau_degree() == 2);
  CHECK(phi_t2.tau_coeff(0) == t * t);
  CHECK(phi_t2.tau_coeff(1) == mk(&F, {0, 1, 0, 1}));  // t + t^3
  CHECK(phi_t2.tau_coeff(2).is_one());
}

TEST_CASE("carlitz action is a ring map") {
  Fq F(3, 1);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 20; ++it) {
    Poly a = random_poly(&F, 3, rng), b = random_poly(&F, 3, rng);
    CHECK(carlitz_action(a * b) == carlitz_action(a).compose(carlitz_action(b)));
    CHECK(carlitz_action(a + b) == carlitz_action(a) + carlitz_action(b));
    CHECK(carlitz_action(a).tau_degree() == a.degree());
    if (!a.zero()) CHECK(carlitz_action(a).tau_coeff(0) == a);
  }
}

TEST_CASE("carlitz action of a prime is Frobenius mod that prime") {
  Fq F(3, 1);
  for (auto pi : {mk(&F, {0, 1}), mk(&F, {1, 0, 1}), mk(&F, {1, 2, 0, 1})}) {
    REQUIRE(is_irreducible(pi));
    AdditivePoly phi = carlitz_action(pi);
    int d = pi.degree();
    for (int k = 0; k < d; ++k)
      CHECK(divrem(phi.tau_coeff(k), pi).second.zero());
    CHECK(phi.tau_coeff(d).is_one());
  }
}

TEST_CASE("prime context and residue field") {
  Fq F(3, 1);
  PrimeCtx P(&F, mk(&F, {1, 0, 1}));  // t^2+1
  CHECK(P.d() == 2);
  CHECK(P.residue_size() == 9);
  // residue arithmetic: (t)(t) = -1 = 2 mod t^2+1
  int tc = P.res_code(Poly::variable(&F));
  CHECK(P.res_mul(tc, tc) == 2);
  for (int a = 1; a < 9; ++a) CHECK(P.res_mul(a, P.res_inv(a)) == 1);
  CHECK_THROWS_AS(PrimeCtx(&F, mk(&F, {2, 0, 1})), precondition_error);
  CHECK_THROWS_AS(PrimeCtx(&F, mk(&F, {1, 2})), precondition_error);  // not monic
}
