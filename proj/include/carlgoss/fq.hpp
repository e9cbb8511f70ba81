#pragma once

#include <cstdint>
#include <vector>

#include "carlgoss/common.hpp"

namespace carlgoss {

// An element of F_q packed as an integer code in [0, q): the base-p encoding
// of its coordinate vector in the power basis of the defining modulus.
using fq_code = std::uint16_t;

// F_q = F_p[u]/(modulus), q = p^e, p an odd prime. All arithmetic is table
// driven; one Fq object is the context for every element code produced with
// it. Contexts are compared by identity: values from two different Fq
// objects never mix, even if the parameters agree.
class Fq {
 public:
  // modulus: little-endian coefficients in [0,p), length e+1, monic. Ignored
  // when e == 1. Must be irreducible over F_p; verified at construction.
  Fq(int p, int e, std::vector<int> modulus = {});

  Fq(const Fq&) = delete;
  Fq& operator=(const Fq&) = delete;

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  bool prime_field() const { return e_ == 1; }
  const std::vector<int>& modulus() const { return mod_; }

  fq_code add(fq_code a, fq_code b) const { return add_[a * q_ + b]; }
  fq_code sub(fq_code a, fq_code b) const { return add_[a * q_ + neg_[b]]; }
  fq_code neg(fq_code a) const { return neg_[a]; }
  fq_code mul(fq_code a, fq_code b) const { return mul_[a * q_ + b]; }
  fq_code inv(fq_code a) const;
  fq_code div(fq_code a, fq_code b) const { return mul(a, inv(b)); }
  // a^k; negative k allowed for units.
  fq_code pow(fq_code a, long long k) const;
  // a^p, the absolute Frobenius.
  fq_code frob(fq_code a) const { return frob_[a]; }

  std::vector<int> coords(fq_code a) const;
  fq_code from_coords(const std::vector<int>& v) const;

  // Raw tables for hot loops; laid out as q*q row-major.
  const fq_code* add_table() const { return add_.data(); }
  const fq_code* mul_table() const { return mul_.data(); }

 private:
  int p_, e_, q_;
  std::vector<int> mod_;
  std::vector<fq_code> add_, mul_, neg_, inv_, frob_;
};

}  // namespace carlgoss
