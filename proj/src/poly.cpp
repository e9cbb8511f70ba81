#include "carlgoss/poly.hpp"

#include <algorithm>

namespace carlgoss {

namespace {
void require_same_field(const Poly& a, const Poly& b) {
  if (a.field() != b.field())
    throw precondition_error("mixed-field polynomial operands");
}
}  // namespace

Poly::Poly(const Fq* F, std::vector<fq_code> coeffs) : F_(F), c_(std::move(coeffs)) {
  for (fq_code c : c_)
    if (c >= F_->q()) throw precondition_error("coefficient code out of range");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Fq* F, fq_code c) {
  Poly r(F);
  if (c != 0) r.c_ = {c};
  return r;
}

Poly Poly::variable(const Fq* F) {
  Poly r(F);
  r.c_ = {0, 1};
  return r;
}

fq_code Poly::eval(fq_code x) const {
  fq_code r = 0;
  for (int k = degree(); k >= 0; --k) r = F_->add(F_->mul(r, x), c_[k]);
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  require_same_field(*this, o);
  Poly r(F_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (size_t k = 0; k < r.c_.size(); ++k)
    r.c_[k] = F_->add(k < c_.size() ? c_[k] : 0, k < o.c_.size() ? o.c_[k] : 0);
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(F_);
  r.c_ = c_;
  for (auto& c : r.c_) c = F_->neg(c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  require_same_field(*this, o);
  Poly r(F_);
  if (zero() || o.zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, 0);
  if (F_->prime_field()) {
    const int p = F_->p();
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const int ai = c_[i];
      for (size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] = static_cast<fq_code>((r.c_[i + j] + ai * o.c_[j]) % p);
    }
  } else {
    const fq_code* add = F_->add_table();
    const fq_code* mul = F_->mul_table();
    const int q = F_->q();
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const fq_code* row = mul + static_cast<size_t>(c_[i]) * q;
      for (size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] = add[static_cast<size_t>(r.c_[i + j]) * q + row[o.c_[j]]];
    }
  }
  r.trim();
  return r;
}

Poly Poly::scaled(fq_code c) const {
  Poly r(F_);
  if (c == 0) return r;
  r.c_ = c_;
  for (auto& x : r.c_) x = F_->mul(x, c);
  return r;
}

Poly Poly::shifted(int k) const {
  Poly r(F_);
  if (zero()) return r;
  r.c_.assign(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

Poly Poly::pow(long long k) const {
  if (k < 0) throw precondition_error("negative polynomial exponent");
  Poly r = Poly::constant(F_, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Poly Poly::frobenius_power(int i) const {
  if (i < 0) throw precondition_error("negative Frobenius power");
  if (i == 0 || zero()) return *this;
  long long qi = 1;
  for (int t = 0; t < i; ++t) qi *= F_->q();
  Poly r(F_);
  r.c_.assign(static_cast<size_t>(degree()) * qi + 1, 0);
  for (size_t k = 0; k < c_.size(); ++k) {
    fq_code c = c_[k];
    for (int t = 0; t < i * F_->e(); ++t) c = F_->frob(c);
    r.c_[k * qi] = c;
  }
  return r;
}

bool Poly::canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  if (a.field() != b.field()) throw precondition_error("mixed-field polynomial operands");
  if (b.zero()) throw precondition_error("polynomial division by zero");
  const Fq* F = a.field();
  std::vector<fq_code> rem(a.coeffs());
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly(F), a};
  std::vector<fq_code> quot(da - db + 1, 0);
  fq_code lead_inv = F->inv(b.leading());
  for (int k = da; k >= db; --k) {
    fq_code c = rem[k];
    if (c == 0) continue;
    fq_code f = F->mul(c, lead_inv);
    quot[k - db] = f;
    for (int t = 0; t <= db; ++t)
      rem[k - db + t] = F->sub(rem[k - db + t], F->mul(f, b.coeff(t)));
  }
  return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly gcd_monic(Poly a, Poly b) {
  if (a.field() != b.field()) throw precondition_error("mixed-field polynomial operands");
  const Fq* F = a.field();
  while (!b.zero()) {
    Poly r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.zero()) return a;
  return a.scaled(F->inv(a.leading()));
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Fq* F = a.field();
  Poly r0 = a, r1 = b;
  Poly u0 = Poly::constant(F, 1), u1(F);
  Poly v0(F), v1 = Poly::constant(F, 1);
  while (!r1.zero()) {
    auto [q, r] = divrem(r0, r1);
    Poly u = u0 - q * u1;
    Poly v = v0 - q * v1;
    r0 = std::move(r1); r1 = std::move(r);
    u0 = std::move(u1); u1 = std::move(u);
    v0 = std::move(v1); v1 = std::move(v);
  }
  if (r0.zero()) return {r0, u0, v0};
  fq_code s = F->inv(r0.leading());
  return {r0.scaled(s), u0.scaled(s), v0.scaled(s)};
}

bool is_irreducible(const Poly& f) {
  if (f.zero()) throw precondition_error("irreducibility of the zero polynomial");
  int n = f.degree();
  if (n == 0) return false;
  if (n == 1) return true;
  const Fq* F = f.field();
  const Poly x = Poly::variable(F);

  // h_k = t^{q^k} mod f, built by exponentiation to q at each step
  auto pow_q_mod = [&](Poly h) {
    long long k = F->q();
    Poly r = Poly::constant(F, 1);
    while (k > 0) {
      if (k & 1) r = divrem(r * h, f).second;
      h = divrem(h * h, f).second;
      k >>= 1;
    }
    return r;
  };

  std::vector<Poly> ladder(n + 1);
  ladder[0] = divrem(x, f).second;
  for (int k = 1; k <= n; ++k) ladder[k] = pow_q_mod(ladder[k - 1]);
  if (ladder[n] != ladder[0]) return false;
  for (int ell = 2; ell <= n; ++ell) {
    if (n % ell != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= ell; ++d)
      if (ell % d == 0) { prime = false; break; }
    if (!prime) continue;
    if (gcd_monic(ladder[n / ell] - ladder[0], f).degree() != 0) return false;
  }
  return true;
}

void for_each_monic(const Fq* F, int n, const std::function<void(const Poly&)>& fn) {
  if (n < 0) throw precondition_error("negative degree");
  const int q = F->q();
  std::vector<fq_code> c(n + 1, 0);
  c[n] = 1;
  for (;;) {
    fn(Poly(F, c));
    int k = n - 1;  // odometer with c_{n-1} fastest: lex order on (c_0, ..., c_{n-1})
    while (k >= 0) {
      if (++c[k] < q) break;
      c[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

std::vector<Poly> monic_polys(const Fq* F, int n) {
  std::vector<Poly> out;
  for_each_monic(F, n, [&](const Poly& a) { out.push_back(a); });
  return out;
}

std::vector<Poly> monic_irreducibles(const Fq* F, int max_deg) {
  std::vector<Poly> out;
  for (int n = 1; n <= max_deg; ++n)
    for_each_monic(F, n, [&](const Poly& a) {
      if (is_irreducible(a)) out.push_back(a);
    });
  return out;
}

std::string to_string(const Poly& a) {
  if (a.zero()) return "0";
  std::string s;
  for (int k = a.degree(); k >= 0; --k) {
    fq_code c = a.coeff(k);
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (k == 0 || c != 1) s += std::to_string(c);
    if (k > 0) {
      if (c != 1) s += "*";
      s += "t";
      if (k > 1) s += "^" + std::to_string(k);
    }
  }
  return s;
}

}  // namespace carlgoss
