#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "carlgoss/fq.hpp"

namespace carlgoss {

// Polynomial in t over F_q, little-endian coefficients, no trailing zeros.
// The zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Fq* F) : F_(F) {}
  Poly(const Fq* F, std::vector<fq_code> coeffs);

  static Poly constant(const Fq* F, fq_code c);
  static Poly variable(const Fq* F);  // t

  const Fq* field() const { return F_; }
  const std::vector<fq_code>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool monic() const { return !c_.empty() && c_.back() == 1; }
  fq_code coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }
  fq_code leading() const { return c_.empty() ? 0 : c_.back(); }
  fq_code eval(fq_code x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(fq_code c) const;
  Poly shifted(int k) const;  // * t^k, k >= 0
  Poly pow(long long k) const;  // k >= 0
  // The q^i-th power: coefficient Frobenius plus exponent dilation.
  Poly frobenius_power(int i) const;

  bool operator==(const Poly& o) const { return F_ == o.F_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Canonical order: by degree, then lexicographic on the coefficient
  // sequence read from the constant term up.
  static bool canonical_less(const Poly& a, const Poly& b);

 private:
  const Fq* F_ = nullptr;
  std::vector<fq_code> c_;

  void trim();
};

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly gcd_monic(Poly a, Poly b);
struct ExtGcd {
  Poly g, u, v;  // u*a + v*b == g, g monic
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

// Deterministic distinct-degree criterion; no randomness.
bool is_irreducible(const Poly& f);

// Monic polynomials of degree n, in lexicographic order on the coefficient
// sequence (c_0, ..., c_{n-1}).
void for_each_monic(const Fq* F, int n, const std::function<void(const Poly&)>& fn);
std::vector<Poly> monic_polys(const Fq* F, int n);
// All monic irreducibles of degree 1..max_deg, sorted by (degree, lex).
std::vector<Poly> monic_irreducibles(const Fq* F, int max_deg);

std::string to_string(const Poly& a);

}  // namespace carlgoss
