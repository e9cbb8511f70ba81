#pragma once

#include <limits>
#include <vector>

#include "carlgoss/fq.hpp"
#include "carlgoss/padic.hpp"

namespace carlgoss {

// Truncated Laurent series in 1/t over F_q: sum_k c_k t^{-(val+k)} with
// c_0 != 0. abs_prec() is the absolute cutoff: coefficients of t^{-j} are
// known for all j < abs_prec(). Elements coming from polynomials are exact
// (abs_prec == EXACT): every unstored coefficient is genuinely zero, not
// merely unknown, so valuation claims are never overstated.
class LaurentElem {
 public:
  static constexpr int EXACT = std::numeric_limits<int>::max();

  LaurentElem() = default;
  // zero known up to t^{-abs_prec}; EXACT for the true zero
  static LaurentElem zero_to(const Fq* F, int abs_prec);
  static LaurentElem exact_zero(const Fq* F) { return zero_to(F, EXACT); }
  static LaurentElem from_poly(const Poly& a);
  static LaurentElem t_power(const Fq* F, int k);  // t^k, exact
  // explicit series: coeffs[k] multiplies t^{-(val+k)}
  LaurentElem(const Fq* F, int val, std::vector<fq_code> coeffs, int abs_prec);

  const Fq* field() const { return F_; }
  bool zero_rep() const { return c_.empty(); }
  bool exact() const { return abs_prec_ == EXACT; }
  int abs_prec() const { return abs_prec_; }
  int rel_prec() const;  // abs_prec - val; EXACT stays EXACT
  const std::vector<fq_code>& coeffs() const { return c_; }
  int val_raw() const { return val_; }
  fq_code coeff_at(int j) const;  // coefficient of t^{-j}

  struct Val {
    int v;
    bool floor;  // true: only v >= abs_prec is certified (zero rep)
  };
  Val valuation() const;

  LaurentElem operator+(const LaurentElem& o) const;
  LaurentElem operator-(const LaurentElem& o) const;
  LaurentElem operator-() const;
  LaurentElem operator*(const LaurentElem& o) const;
  LaurentElem truncated(int abs_prec) const;
  bool operator==(const LaurentElem& o) const {
    return F_ == o.F_ && val_ == o.val_ && c_ == o.c_ && abs_prec_ == o.abs_prec_;
  }

 private:
  const Fq* F_ = nullptr;
  int val_ = 0;
  std::vector<fq_code> c_;
  int abs_prec_ = 0;

  void normalize();
};

// sign and one-unit decomposition at infinity: a = sgn(a) * t^{deg a} * <a>
// with <a> in 1 + (1/t)F_q[[1/t]]; both factors exact.
struct SignSplit {
  fq_code sign;
  LaurentElem one_unit;
};
SignSplit sign_and_one_unit_infty(const Poly& a);

// x -> x^p; exact on exact input, dilates precision by p otherwise.
LaurentElem frobenius_p(const LaurentElem& x);
LaurentElem laurent_invert(const LaurentElem& x, int rel_prec = -1);
LaurentElem laurent_pow_int(const LaurentElem& x, long long k);  // k >= 0
// u^y for a one-unit u (val 0, leading 1), y known mod p^m. Output relative
// precision min(target, rel_prec(u)); target must not exceed p^m.
LaurentElem laurent_pow_zp(const LaurentElem& u, const ZpApprox& y, int target = -1);

}  // namespace carlgoss
