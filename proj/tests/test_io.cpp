#include "doctest.h"

#include "carlgoss/io.hpp"
#include "carlgoss/powersums.hpp"

using namespace carlgoss;

namespace {

Poly mk(const Fq* F, std::vector<fq_code> c) { return Poly(F, std::move(c)); }

}  // namespace

TEST_CASE("polynomial round-trip") {
  Fq F(3, 1);
  Poly a = mk(&F, {1, 0, 2});
  json j = poly_json(a);
  CHECK(j == json::array({1, 0, 2}));
  CHECK(poly_from_json(&F, j) == a);
  CHECK(poly_from_json(&F, json::array()) == Poly(&F));
  CHECK_THROWS_AS(poly_from_json(&F, json::array({3})), precondition_error);
}

TEST_CASE("local element round-trips") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  PadicElem a(&P, mk(&F, {1, 2}), 3);
  json ja = padic_json(a);
  CHECK(ja["prec"] == 3);
  CHECK(padic_from_json(&P, ja) == a);

  ZpApprox y(3, 7, 3);
  json jy = zp_json(y);
  ZpApprox back = zp_from_json(jy);
  CHECK(back.p() == 3);
  CHECK(back.value() == 7);
  CHECK(back.digits() == 3);
}

TEST_CASE("laurent round-trips keep the precision marker") {
  Fq F(3, 1);
  LaurentElem x = LaurentElem::t_power(&F, 2);
  json jx = laurent_json(x);
  CHECK(jx["prec"] == "exact");
  CHECK(laurent_from_json(&F, jx) == x);

  LaurentElem cut = (x + LaurentElem::t_power(&F, -1)).truncated(5);
  json jc = laurent_json(cut);
  CHECK(jc["prec"] == 5);
  CHECK(laurent_from_json(&F, jc) == cut);
}

TEST_CASE("group ring terms are sparse and ordered") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  GammaLevel G(&P, 1);
  GroupRingElem g(&G);
  g.set_coeff(2, 1);
  g.set_coeff(0, 2);
  json jg = groupring_json(g);
  CHECK(jg["level"] == 1);
  REQUIRE(jg["terms"].size() == 2);
  CHECK(jg["terms"][0] == json::array({0, 2}));
  CHECK(jg["terms"][1] == json::array({2, 1}));
  CHECK(groupring_from_json(&G, jg) == g);
  CHECK_THROWS_AS(groupring_from_json(&G, json{{"level", 1}, {"terms", {{9, 1}}}}),
                  precondition_error);
}

TEST_CASE("canonical dump is stable") {
  Fq F(3, 1);
  PrimeCtx P(&F, Poly::variable(&F));
  PadicElem a(&P, mk(&F, {1, 2}), 3);
  std::string s = dump_canonical(padic_json(a));
  CHECK(s == dump_canonical(padic_json(a)));
  CHECK(s.back() == '\n');
  // keys come out sorted regardless of insertion order
  json j1;
  j1["b"] = 1;
  j1["a"] = 2;
  json j2;
  j2["a"] = 2;
  j2["b"] = 1;
  CHECK(dump_canonical(j1) == dump_canonical(j2));
}
