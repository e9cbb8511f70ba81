#include "carlgoss/padic.hpp"

namespace carlgoss {

namespace {
void require_same_ctx(const PadicElem& a, const PadicElem& b) {
  if (a.ctx() != b.ctx()) throw precondition_error("mixed-prime pi-adic operands");
}
}  // namespace

PadicElem::PadicElem(const PrimeCtx* P, Poly rep, int prec) : P_(P), prec_(prec) {
  if (prec < 1) throw precondition_error("pi-adic precision must be >= 1");
  if (rep.field() != P->field()) throw precondition_error("representative from the wrong field");
  rep_ = P_->reduce(rep, prec_);
}

bool PadicElem::is_unit() const {
  return !divrem(rep_, P_->pi()).second.zero();
}

PadicElem PadicElem::operator+(const PadicElem& o) const {
  require_same_ctx(*this, o);
  return PadicElem(P_, rep_ + o.rep_, std::min(prec_, o.prec_));
}

PadicElem PadicElem::operator-(const PadicElem& o) const {
  require_same_ctx(*this, o);
  return PadicElem(P_, rep_ - o.rep_, std::min(prec_, o.prec_));
}

PadicElem PadicElem::operator-() const { return PadicElem(P_, -rep_, prec_); }

PadicElem PadicElem::operator*(const PadicElem& o) const {
  require_same_ctx(*this, o);
  return PadicElem(P_, rep_ * o.rep_, std::min(prec_, o.prec_));
}

PadicElem::Val PadicElem::valuation() const {
  if (rep_.zero()) return {prec_, true};
  Poly r = rep_;
  int v = 0;
  for (;;) {
    auto [q, rem] = divrem(r, P_->pi());
    if (!rem.zero()) break;
    r = q;
    ++v;
  }
  return {v, false};
}

PadicElem PadicElem::with_prec(int M) const {
  if (M > prec_) throw precondition_error("cannot widen pi-adic precision");
  return PadicElem(P_, rep_, M);
}

PadicElem padic_invert(const PadicElem& u) {
  if (!u.is_unit()) throw precondition_error("pi-adic inverse of a non-unit");
  const PrimeCtx* P = u.ctx();
  ExtGcd g = ext_gcd(u.rep(), P->pi_power(u.prec()));
  // gcd is 1 because u is a unit
  return PadicElem(P, g.u, u.prec());
}

PadicElem padic_div_pi(const PadicElem& a) {
  if (a.prec() < 2) throw precondition_error("dividing by pi would exhaust precision");
  auto [q, rem] = divrem(a.rep(), a.ctx()->pi());
  if (!rem.zero()) throw precondition_error("element not divisible by pi");
  return PadicElem(a.ctx(), q, a.prec() - 1);
}

PadicElem padic_pow_int(const PadicElem& a, long long k) {
  if (k < 0) throw precondition_error("negative integer exponent; invert first");
  PadicElem r(a.ctx(), Poly::constant(a.ctx()->field(), 1), a.prec());
  PadicElem base = a;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

PadicElem teichmuller(const PadicElem& u) {
  if (!u.is_unit()) throw precondition_error("Teichmuller root of a non-unit");
  const long long qd = u.ctx()->residue_size();
  PadicElem x = u;
  // precision of the fixed-point iteration multiplies by q^d each step
  int steps = 1;
  long long reach = qd;
  while (reach < u.prec()) {
    reach *= qd;
    ++steps;
  }
  for (int k = 0; k <= steps + 1; ++k) {
    PadicElem next = padic_pow_int(x, qd);
    if (next == x) return x;
    x = next;
  }
  throw guard_error("Teichmuller iteration failed to stabilize");
}

PadicElem one_unit_part(const PadicElem& u) {
  return u * padic_invert(teichmuller(u));
}

ZpApprox::ZpApprox(int p, long long value, int digits) : p_(p), digits_(digits) {
  if (p < 2) throw precondition_error("p must be a prime");
  if (digits < 0 || digits > 38) throw precondition_error("digit count out of range");
  mod_ = 1;
  for (int k = 0; k < digits; ++k) {
    if (mod_ > (1LL << 62) / p) throw precondition_error("p^digits overflows");
    mod_ *= p;
  }
  value_ = ((value % mod_) + mod_) % mod_;
}

ZpApprox ZpApprox::integer(int p, long long j, int digits) {
  if (j < 0) throw precondition_error("integer() expects j >= 0");
  return ZpApprox(p, j, digits);
}

int ZpApprox::digit(int k) const {
  if (k < 0 || k >= digits_) throw precondition_error("digit index out of range");
  long long v = value_;
  for (int t = 0; t < k; ++t) v /= p_;
  return static_cast<int>(v % p_);
}

ZpApprox ZpApprox::negated() const { return ZpApprox(p_, mod_ - value_, digits_); }

ZpApprox ZpApprox::truncated(int digits) const {
  if (digits > digits_) throw precondition_error("cannot widen a p-adic approximation");
  return ZpApprox(p_, value_, digits);
}

ZpApprox ZpApprox::operator+(const ZpApprox& o) const {
  if (p_ != o.p_) throw precondition_error("mixed-p approximations");
  return ZpApprox(p_, value_ + o.value_, std::min(digits_, o.digits_));
}

PadicElem padic_pow_zp(const PadicElem& u, const ZpApprox& y, int target) {
  const PrimeCtx* P = u.ctx();
  if (y.p() != P->field()->p()) throw precondition_error("exponent p does not match the field characteristic");
  if (target == -1) target = u.prec();
  if (target < 1 || target > u.prec()) throw precondition_error("invalid target precision");
  if (target > y.modulus())
    throw precondition_error("insufficient exponent digits: need p^m >= target precision");
  Poly one = Poly::constant(P->field(), 1);
  if (!divrem(u.rep() - one, P->pi()).second.zero())
    throw precondition_error("Z_p exponent requires a one-unit base");

  PadicElem r(P, one, target);
  PadicElem base = u.with_prec(target);
  long long pk = 1;
  for (int k = 0; k < y.digits() && pk < target; ++k, pk *= y.p()) {
    int dk = y.digit(k);
    for (int t = 0; t < dk; ++t) r = r * base;
    base = padic_pow_int(base, y.p());
  }
  return r;
}

}  // namespace carlgoss
