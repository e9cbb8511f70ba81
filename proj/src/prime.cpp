#include "carlgoss/prime.hpp"

namespace carlgoss {

PrimeCtx::PrimeCtx(const Fq* F, Poly pi) : F_(F), pi_(std::move(pi)) {
  if (pi_.field() != F_) throw precondition_error("prime does not belong to the given field");
  if (!pi_.monic()) throw precondition_error("prime must be monic");
  if (!is_irreducible(pi_)) throw precondition_error("prime must be irreducible");
  d_ = pi_.degree();

  long long sz = 1;
  for (int k = 0; k < d_; ++k) {
    sz *= F_->q();
    if (sz > 4096) throw precondition_error("residue field too large for table arithmetic (q^d > 4096)");
  }
  rsize_ = static_cast<int>(sz);

  radd_.assign(static_cast<size_t>(rsize_) * rsize_, 0);
  rmul_.assign(static_cast<size_t>(rsize_) * rsize_, 0);
  rneg_.assign(rsize_, 0);
  rinv_.assign(rsize_, 0);
  for (int a = 0; a < rsize_; ++a) {
    Poly pa = res_poly(a);
    rneg_[a] = res_code(-pa);
    for (int b = 0; b < rsize_; ++b) {
      Poly pb = res_poly(b);
      radd_[static_cast<size_t>(a) * rsize_ + b] = res_code(pa + pb);
      rmul_[static_cast<size_t>(a) * rsize_ + b] = res_code(divrem(pa * pb, pi_).second);
    }
  }
  for (int a = 1; a < rsize_; ++a) rinv_[a] = res_pow(a, static_cast<long long>(rsize_) - 2);

  pi_pow_ = {Poly::constant(F_, 1), pi_};
}

const Poly& PrimeCtx::pi_power(int k) const {
  if (k < 0) throw precondition_error("negative power of the prime");
  std::lock_guard<std::mutex> lock(mu_);
  while (static_cast<int>(pi_pow_.size()) <= k) pi_pow_.push_back(pi_pow_.back() * pi_);
  return pi_pow_[k];
}

Poly PrimeCtx::reduce(const Poly& a, int M) const {
  if (M < 1) throw precondition_error("precision must be >= 1");
  if (a.degree() < d_ * M) return a;
  return divrem(a, pi_power(M)).second;
}

int PrimeCtx::res_code(const Poly& rep) const {
  Poly r = rep.degree() < d_ ? rep : divrem(rep, pi_).second;
  int code = 0;
  const int q = F_->q();
  for (int k = d_ - 1; k >= 0; --k) code = code * q + r.coeff(k);
  return code;
}

Poly PrimeCtx::res_poly(int code) const {
  std::vector<fq_code> c(d_, 0);
  const int q = F_->q();
  for (int k = 0; k < d_; ++k) {
    c[k] = static_cast<fq_code>(code % q);
    code /= q;
  }
  return Poly(F_, std::move(c));
}

int PrimeCtx::res_inv(int a) const {
  if (a == 0) throw precondition_error("inverse of zero residue");
  return rinv_[a];
}

int PrimeCtx::res_pow(int a, long long k) const {
  if (k < 0) {
    a = res_inv(a);
    k = -k;
  }
  if (a == 0) return k == 0 ? 1 : 0;
  k %= (rsize_ - 1);
  int r = 1, base = a;
  while (k > 0) {
    if (k & 1) r = res_mul(r, base);
    base = res_mul(base, base);
    k >>= 1;
  }
  return r;
}

}  // namespace carlgoss
