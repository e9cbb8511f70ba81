#include "carlgoss/fq.hpp"

#include <algorithm>

#include "carlgoss/poly.hpp"

namespace carlgoss {

namespace {

bool small_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// coordinate-vector product reduced by the modulus, all mod p
std::vector<int> coord_mul(const std::vector<int>& a, const std::vector<int>& b,
                           const std::vector<int>& mod, int p) {
  int e = static_cast<int>(mod.size()) - 1;
  std::vector<int> prod(2 * e - 1, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int k = 2 * e - 2; k >= e; --k) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // subtract c * u^{k-e} * modulus (monic)
    for (int t = 0; t <= e; ++t) {
      int idx = k - e + t;
      prod[idx] = ((prod[idx] - c * mod[t]) % p + p) % p;
    }
  }
  prod.resize(e);
  return prod;
}

}  // namespace

Fq::Fq(int p, int e, std::vector<int> modulus) : p_(p), e_(e) {
  if (!small_prime(p) || p < 3) throw precondition_error("field characteristic must be an odd prime");
  if (e < 1) throw precondition_error("field extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 1024) throw precondition_error("field too large for table-based arithmetic (q > 1024)");
  }
  q_ = static_cast<int>(q);

  if (e == 1) {
    mod_ = {0, 1};
  } else {
    if (modulus.empty()) throw precondition_error("extension field requires an explicit modulus");
    if (static_cast<int>(modulus.size()) != e + 1 || modulus.back() != 1)
      throw precondition_error("modulus must be monic of degree e");
    for (int c : modulus)
      if (c < 0 || c >= p) throw precondition_error("modulus coefficients must lie in [0, p)");
    mod_ = std::move(modulus);
  }

  add_.assign(static_cast<size_t>(q_) * q_, 0);
  mul_.assign(static_cast<size_t>(q_) * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, 0);
  frob_.assign(q_, 0);

  auto decode = [&](int a) {
    std::vector<int> v(e_);
    for (int i = 0; i < e_; ++i) {
      v[i] = a % p_;
      a /= p_;
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int a = 0;
    for (int i = e_ - 1; i >= 0; --i) a = a * p_ + v[i];
    return static_cast<fq_code>(a);
  };

  for (int a = 0; a < q_; ++a) {
    auto va = decode(a);
    std::vector<int> vn(e_);
    for (int i = 0; i < e_; ++i) vn[i] = (p_ - va[i]) % p_;
    neg_[a] = encode(vn);
    for (int b = 0; b < q_; ++b) {
      auto vb = decode(b);
      std::vector<int> vs(e_);
      for (int i = 0; i < e_; ++i) vs[i] = (va[i] + vb[i]) % p_;
      add_[static_cast<size_t>(a) * q_ + b] = encode(vs);
      mul_[static_cast<size_t>(a) * q_ + b] =
          e_ == 1 ? static_cast<fq_code>((a * b) % p_) : encode(coord_mul(va, vb, mod_, p_));
    }
  }
  for (int a = 1; a < q_; ++a) {
    inv_[a] = pow(static_cast<fq_code>(a), q_ - 2);
    frob_[a] = pow(static_cast<fq_code>(a), p_);
  }
  frob_[0] = 0;

  if (e_ > 1) {
    // irreducibility of the modulus over the prime field
    Fq base(p_, 1);
    std::vector<fq_code> mc(mod_.begin(), mod_.end());
    if (!is_irreducible(Poly(&base, mc)))
      throw precondition_error("modulus is not irreducible over F_p");
  }
}

fq_code Fq::inv(fq_code a) const {
  if (a == 0) throw precondition_error("inverse of zero field element");
  return inv_[a];
}

fq_code Fq::pow(fq_code a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  if (a == 0) return k == 0 ? 1 : 0;
  k %= (q_ - 1);
  fq_code r = 1, base = a;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

std::vector<int> Fq::coords(fq_code a) const {
  std::vector<int> v(e_);
  int x = a;
  for (int i = 0; i < e_; ++i) {
    v[i] = x % p_;
    x /= p_;
  }
  return v;
}

fq_code Fq::from_coords(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != e_) throw precondition_error("coordinate vector has wrong length");
  int a = 0;
  for (int i = e_ - 1; i >= 0; --i) {
    if (v[i] < 0 || v[i] >= p_) throw precondition_error("coordinate out of range");
    a = a * p_ + v[i];
  }
  return static_cast<fq_code>(a);
}

}  // namespace carlgoss
