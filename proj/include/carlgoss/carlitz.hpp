#pragma once

#include <vector>

#include "carlgoss/poly.hpp"

namespace carlgoss {

// F_q-linear (additive) polynomial sum_k c_k x^{q^k}, stored by its
// tau-coefficients c_k in A = F_q[t]. Composition is the skew product
// (sum a_i tau^i)(sum b_j tau^j) with tau*f = f^q*tau.
class AdditivePoly {
 public:
  AdditivePoly() = default;
  explicit AdditivePoly(const Fq* F) : F_(F) {}
  AdditivePoly(const Fq* F, std::vector<Poly> tau_coeffs);

  const Fq* field() const { return F_; }
  const std::vector<Poly>& tau_coeffs() const { return c_; }
  int tau_degree() const { return static_cast<int>(c_.size()) - 1; }
  Poly tau_coeff(int k) const;
  bool zero() const { return c_.empty(); }

  AdditivePoly operator+(const AdditivePoly& o) const;
  AdditivePoly compose(const AdditivePoly& o) const;
  AdditivePoly scaled(fq_code c) const;
  // evaluation at a polynomial argument: sum c_k * x^{q^k}
  Poly eval(const Poly& x) const;

  bool operator==(const AdditivePoly& o) const { return F_ == o.F_ && c_ == o.c_; }

 private:
  const Fq* F_ = nullptr;
  std::vector<Poly> c_;

  void trim();
};

// The Carlitz module action phi_a: t acts as t*tau^0 + tau, extended to all
// of A as an F_q-algebra map a -> phi_a.
AdditivePoly carlitz_action(const Poly& a);

}  // namespace carlgoss
