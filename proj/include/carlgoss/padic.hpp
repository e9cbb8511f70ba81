#pragma once

#include <cstdint>

#include "carlgoss/prime.hpp"

namespace carlgoss {

// Truncated pi-adic integer: a residue in A/(pi^prec). Precision is part of
// the value; every operation returns the minimum precision of its inputs and
// nothing ever widens silently. rep is always reduced mod pi^prec.
class PadicElem {
 public:
  PadicElem() = default;
  PadicElem(const PrimeCtx* P, Poly rep, int prec);

  const PrimeCtx* ctx() const { return P_; }
  const Poly& rep() const { return rep_; }
  int prec() const { return prec_; }
  bool zero_rep() const { return rep_.zero(); }  // zero at this precision
  bool is_unit() const;                          // nonzero mod pi

  PadicElem operator+(const PadicElem& o) const;
  PadicElem operator-(const PadicElem& o) const;
  PadicElem operator-() const;
  PadicElem operator*(const PadicElem& o) const;
  bool operator==(const PadicElem& o) const {
    return P_ == o.P_ && prec_ == o.prec_ && rep_ == o.rep_;
  }
  bool operator!=(const PadicElem& o) const { return !(*this == o); }

  // v such that pi^v exactly divides rep. A zero rep only certifies
  // v >= prec, reported with floor == true and v == prec.
  struct Val {
    int v;
    bool floor;
  };
  Val valuation() const;

  PadicElem with_prec(int M) const;  // M <= prec

 private:
  const PrimeCtx* P_ = nullptr;
  Poly rep_;
  int prec_ = 0;
};

PadicElem padic_invert(const PadicElem& u);        // u a unit
PadicElem padic_div_pi(const PadicElem& a);        // v(a) >= 1; drops precision by 1
PadicElem padic_pow_int(const PadicElem& a, long long k);  // k >= 0

// The Teichmuller root: the unique (q^d - 1)-st root of unity congruent to
// the unit u mod pi, computed by iterating x -> x^{q^d} to a fixed point.
PadicElem teichmuller(const PadicElem& u);
PadicElem one_unit_part(const PadicElem& u);  // u * teichmuller(u)^{-1}

// An approximation to a p-adic integer: a residue mod p^digits. The base-p
// digits are what Z_p-exponentiation consumes.
class ZpApprox {
 public:
  ZpApprox(int p, long long value, int digits);
  static ZpApprox integer(int p, long long j, int digits);  // j mod p^digits, j >= 0

  int p() const { return p_; }
  long long value() const { return value_; }
  int digits() const { return digits_; }
  long long modulus() const { return mod_; }
  int digit(int k) const;
  ZpApprox negated() const;
  ZpApprox truncated(int digits) const;
  ZpApprox operator+(const ZpApprox& o) const;  // min digits

 private:
  int p_;
  long long value_;
  int digits_;
  long long mod_;
};

// u^y for a one-unit u (u == 1 mod pi) and y known mod p^m, via the base-p
// digit product prod_k (u^{p^k})^{y_k}. Since w^{p^m} == 1 mod pi^{p^m} for
// any one-unit w, the result is well defined exactly up to precision p^m:
// the output precision is min(target, u.prec()), and target must not exceed
// p^m. target == -1 requests u.prec().
PadicElem padic_pow_zp(const PadicElem& u, const ZpApprox& y, int target = -1);

}  // namespace carlgoss
