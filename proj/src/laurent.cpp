#include "carlgoss/laurent.hpp"

#include <algorithm>

namespace carlgoss {

namespace {
// saturating add for precision bookkeeping
int prec_add(int a, int b) {
  if (a == LaurentElem::EXACT || b == LaurentElem::EXACT) return LaurentElem::EXACT;
  return a + b;
}
}  // namespace

LaurentElem LaurentElem::zero_to(const Fq* F, int abs_prec) {
  LaurentElem r;
  r.F_ = F;
  r.abs_prec_ = abs_prec;
  return r;
}

LaurentElem LaurentElem::from_poly(const Poly& a) {
  if (a.zero()) return exact_zero(a.field());
  int d = a.degree();
  std::vector<fq_code> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = a.coeff(d - k);
  return LaurentElem(a.field(), -d, std::move(c), EXACT);
}

LaurentElem LaurentElem::t_power(const Fq* F, int k) {
  return LaurentElem(F, -k, {1}, EXACT);
}

LaurentElem::LaurentElem(const Fq* F, int val, std::vector<fq_code> coeffs, int abs_prec)
    : F_(F), val_(val), c_(std::move(coeffs)), abs_prec_(abs_prec) {
  normalize();
}

void LaurentElem::normalize() {
  // drop leading zeros (raising val) and anything at or past the cutoff
  size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + lead);
    val_ += static_cast<int>(lead);
  }
  if (abs_prec_ != EXACT && !c_.empty()) {
    long long keep = static_cast<long long>(abs_prec_) - val_;
    if (keep <= 0)
      c_.clear();
    else if (keep < static_cast<long long>(c_.size()))
      c_.resize(static_cast<size_t>(keep));
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  if (c_.empty()) val_ = 0;
}

int LaurentElem::rel_prec() const {
  if (abs_prec_ == EXACT) return EXACT;
  return c_.empty() ? 0 : abs_prec_ - val_;
}

fq_code LaurentElem::coeff_at(int j) const {
  if (abs_prec_ != EXACT && j >= abs_prec_)
    throw precondition_error("coefficient beyond known precision");
  if (c_.empty() || j < val_ || j >= val_ + static_cast<int>(c_.size())) return 0;
  return c_[j - val_];
}

LaurentElem::Val LaurentElem::valuation() const {
  if (c_.empty()) {
    if (abs_prec_ == EXACT)
      throw precondition_error("valuation of the exact zero");
    return {abs_prec_, true};
  }
  return {val_, false};
}

LaurentElem LaurentElem::operator+(const LaurentElem& o) const {
  if (F_ != o.F_) throw precondition_error("mixed-field Laurent operands");
  int ap = std::min(abs_prec_, o.abs_prec_);
  if (c_.empty() && o.c_.empty()) return zero_to(F_, ap);
  int lo = c_.empty() ? o.val_ : (o.c_.empty() ? val_ : std::min(val_, o.val_));
  long long hi = 0;
  if (!c_.empty()) hi = std::max(hi, static_cast<long long>(val_) + static_cast<long long>(c_.size()));
  if (!o.c_.empty()) hi = std::max(hi, static_cast<long long>(o.val_) + static_cast<long long>(o.c_.size()));
  std::vector<fq_code> c(static_cast<size_t>(hi - lo), 0);
  for (size_t k = 0; k < c_.size(); ++k) c[val_ - lo + k] = c_[k];
  for (size_t k = 0; k < o.c_.size(); ++k)
    c[o.val_ - lo + k] = F_->add(c[o.val_ - lo + k], o.c_[k]);
  return LaurentElem(F_, lo, std::move(c), ap);
}

LaurentElem LaurentElem::operator-() const {
  LaurentElem r = *this;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

LaurentElem LaurentElem::operator-(const LaurentElem& o) const { return *this + (-o); }

LaurentElem LaurentElem::operator*(const LaurentElem& o) const {
  if (F_ != o.F_) throw precondition_error("mixed-field Laurent operands");
  // relative precision of a product is the minimum of the factors'
  if (c_.empty() || o.c_.empty()) {
    if (abs_prec_ == EXACT && c_.empty() && o.abs_prec_ == EXACT && o.c_.empty())
      return exact_zero(F_);
    int ap;
    if (c_.empty() && o.c_.empty())
      ap = std::min(prec_add(abs_prec_, o.abs_prec_ == EXACT ? 0 : o.abs_prec_),
                    prec_add(o.abs_prec_, abs_prec_ == EXACT ? 0 : abs_prec_));
    else if (c_.empty())
      ap = prec_add(abs_prec_, o.val_);
    else
      ap = prec_add(o.abs_prec_, val_);
    return zero_to(F_, ap);
  }
  int ap = prec_add(val_ + o.val_, std::min(rel_prec(), o.rel_prec()));
  std::vector<fq_code> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = F_->add(c[i + j], F_->mul(c_[i], o.c_[j]));
  }
  return LaurentElem(F_, val_ + o.val_, std::move(c), ap);
}

LaurentElem LaurentElem::truncated(int abs_prec) const {
  if (abs_prec > abs_prec_) throw precondition_error("cannot widen Laurent precision");
  LaurentElem r = *this;
  r.abs_prec_ = abs_prec;
  r.normalize();
  return r;
}

SignSplit sign_and_one_unit_infty(const Poly& a) {
  if (a.zero()) throw precondition_error("sign of the zero polynomial");
  const Fq* F = a.field();
  fq_code s = a.leading();
  fq_code sinv = F->inv(s);
  int d = a.degree();
  std::vector<fq_code> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = F->mul(a.coeff(d - k), sinv);
  return {s, LaurentElem(F, 0, std::move(c), LaurentElem::EXACT)};
}

LaurentElem laurent_invert(const LaurentElem& x, int rel_prec) {
  if (x.zero_rep()) throw precondition_error("inverting a Laurent zero");
  const Fq* F = x.field();
  if (x.coeffs().size() == 1 && x.exact()) {
    // exact monomial: exact inverse
    return LaurentElem(F, -x.val_raw(), {F->inv(x.coeffs()[0])}, LaurentElem::EXACT);
  }
  if (rel_prec == -1) {
    if (x.exact())
      throw precondition_error("inverting an exact series needs a target precision");
    rel_prec = x.rel_prec();
  }
  if (rel_prec < 1) throw precondition_error("inversion target must be >= 1");
  if (!x.exact() && rel_prec > x.rel_prec())
    throw precondition_error("inversion target exceeds operand precision");
  const auto& xc = x.coeffs();
  fq_code lead_inv = F->inv(xc[0]);
  std::vector<fq_code> c(static_cast<size_t>(rel_prec), 0);
  c[0] = lead_inv;
  for (int k = 1; k < rel_prec; ++k) {
    // c_k = -lead^{-1} * sum_{j=1..k} x_j c_{k-j}
    fq_code s = 0;
    for (int j = 1; j <= k && j < static_cast<int>(xc.size()); ++j)
      s = F->add(s, F->mul(xc[j], c[k - j]));
    c[k] = F->neg(F->mul(lead_inv, s));
  }
  return LaurentElem(F, -x.val_raw(), std::move(c), rel_prec - x.val_raw());
}

LaurentElem laurent_pow_int(const LaurentElem& x, long long k) {
  if (k < 0) throw precondition_error("negative exponent; invert first");
  LaurentElem r = LaurentElem::from_poly(Poly::constant(x.field(), 1));
  LaurentElem base = x;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

// p-th power in characteristic p: coefficient Frobenius plus index dilation
LaurentElem frobenius_p(const LaurentElem& x) {
  const Fq* F = x.field();
  if (x.zero_rep()) {
    int ap = x.abs_prec() == LaurentElem::EXACT ? LaurentElem::EXACT
                                                : x.abs_prec() * F->p();
    return LaurentElem::zero_to(F, ap);
  }
  const int p = F->p();
  std::vector<fq_code> c(static_cast<size_t>(x.coeffs().size() - 1) * p + 1, 0);
  for (size_t k = 0; k < x.coeffs().size(); ++k) {
    fq_code v = x.coeffs()[k];
    c[k * p] = F->prime_field() ? v : F->frob(v);
  }
  int ap = x.abs_prec() == LaurentElem::EXACT ? LaurentElem::EXACT : x.rel_prec() * p + x.val_raw() * p;
  return LaurentElem(F, x.val_raw() * p, std::move(c), ap);
}

LaurentElem laurent_pow_zp(const LaurentElem& u, const ZpApprox& y, int target) {
  const Fq* F = u.field();
  if (y.p() != F->p()) throw precondition_error("exponent p does not match the field characteristic");
  if (u.zero_rep() || u.val_raw() != 0 || u.coeffs()[0] != 1)
    throw precondition_error("Z_p exponent requires a one-unit base");
  if (target == -1) {
    if (u.exact()) throw precondition_error("exact base needs an explicit target precision");
    target = u.rel_prec();
  }
  if (target < 1) throw precondition_error("target precision must be >= 1");
  if (!u.exact() && target > u.rel_prec())
    throw precondition_error("target exceeds operand precision");
  if (target > y.modulus())
    throw precondition_error("insufficient exponent digits: need p^m >= target precision");

  LaurentElem r(F, 0, {1}, target);
  LaurentElem base = u.truncated(target);
  long long pk = 1;
  for (int k = 0; k < y.digits() && pk < target; ++k, pk *= y.p()) {
    int dk = y.digit(k);
    for (int t = 0; t < dk; ++t) r = (r * base).truncated(target);
    base = frobenius_p(base).truncated(target);
  }
  return r.truncated(target);
}

}  // namespace carlgoss
