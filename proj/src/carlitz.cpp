#include "carlgoss/carlitz.hpp"

namespace carlgoss {

AdditivePoly::AdditivePoly(const Fq* F, std::vector<Poly> tau_coeffs)
    : F_(F), c_(std::move(tau_coeffs)) {
  trim();
}

void AdditivePoly::trim() {
  while (!c_.empty() && c_.back().zero()) c_.pop_back();
}

Poly AdditivePoly::tau_coeff(int k) const {
  if (k >= 0 && k < static_cast<int>(c_.size())) return c_[k];
  return Poly(F_);
}

AdditivePoly AdditivePoly::operator+(const AdditivePoly& o) const {
  if (F_ != o.F_) throw precondition_error("mixed-field additive polynomials");
  AdditivePoly r(F_);
  size_t n = std::max(c_.size(), o.c_.size());
  r.c_.reserve(n);
  for (size_t k = 0; k < n; ++k) r.c_.push_back(tau_coeff(static_cast<int>(k)) + o.tau_coeff(static_cast<int>(k)));
  r.trim();
  return r;
}

AdditivePoly AdditivePoly::compose(const AdditivePoly& o) const {
  if (F_ != o.F_) throw precondition_error("mixed-field additive polynomials");
  AdditivePoly r(F_);
  if (zero() || o.zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Poly(F_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].zero()) continue;
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j].frobenius_power(static_cast<int>(i));
    }
  }
  r.trim();
  return r;
}

AdditivePoly AdditivePoly::scaled(fq_code c) const {
  AdditivePoly r(F_);
  r.c_.reserve(c_.size());
  for (const Poly& a : c_) r.c_.push_back(a.scaled(c));
  r.trim();
  return r;
}

Poly AdditivePoly::eval(const Poly& x) const {
  Poly r(F_);
  for (size_t k = 0; k < c_.size(); ++k)
    r = r + c_[k] * x.frobenius_power(static_cast<int>(k));
  return r;
}

AdditivePoly carlitz_action(const Poly& a) {
  const Fq* F = a.field();
  // phi_t = t + tau
  AdditivePoly phi_t(F, {Poly::variable(F), Poly::constant(F, 1)});
  AdditivePoly phi_tk(F, {Poly::constant(F, 1)});  // phi_{t^0}
  AdditivePoly r(F);
  for (int k = 0; k <= a.degree(); ++k) {
    if (k > 0) phi_tk = phi_t.compose(phi_tk);
    if (a.coeff(k) != 0) r = r + phi_tk.scaled(a.coeff(k));
  }
  return r;
}

}  // namespace carlgoss
