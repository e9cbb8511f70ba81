#pragma once

#include <mutex>
#include <vector>

#include "carlgoss/poly.hpp"

namespace carlgoss {

// A fixed prime (pi) of A = F_q[t]: the monic irreducible pi of degree d,
// its powers, and the residue field F_{q^d} = A/(pi) with table arithmetic.
// Residue elements are codes in [0, q^d): the base-q encoding of the
// canonical representative of degree < d.
class PrimeCtx {
 public:
  PrimeCtx(const Fq* F, Poly pi);

  PrimeCtx(const PrimeCtx&) = delete;
  PrimeCtx& operator=(const PrimeCtx&) = delete;

  const Fq* field() const { return F_; }
  const Poly& pi() const { return pi_; }
  int d() const { return d_; }
  int residue_size() const { return rsize_; }  // q^d

  const Poly& pi_power(int k) const;  // cached, grows on demand
  Poly reduce(const Poly& a, int M) const;  // a mod pi^M

  int res_code(const Poly& rep) const;  // rep reduced mod pi first
  Poly res_poly(int code) const;
  int res_add(int a, int b) const { return radd_[a * rsize_ + b]; }
  int res_mul(int a, int b) const { return rmul_[a * rsize_ + b]; }
  int res_neg(int a) const { return rneg_[a]; }
  int res_inv(int a) const;
  int res_pow(int a, long long k) const;

 private:
  const Fq* F_;
  Poly pi_;
  int d_;
  int rsize_;
  std::vector<int> radd_, rmul_, rneg_, rinv_;
  mutable std::vector<Poly> pi_pow_;
  mutable std::mutex mu_;
};

}  // namespace carlgoss
