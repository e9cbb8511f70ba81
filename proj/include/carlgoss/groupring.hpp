#pragma once

#include <vector>

#include "carlgoss/padic.hpp"

namespace carlgoss {

// Gamma_n: one-units of (A/pi^{n+1})^*, reps 1 + pi*h with h ranging over
// A/pi^n. The index of an element is the base-q code of h, so the identity
// always sits at index 0. The full multiplication permutation table and the
// inverse table are built eagerly; after construction everything is
// read-only and safe to share across threads.
class GammaLevel {
 public:
  GammaLevel(const PrimeCtx* P, int n);

  GammaLevel(const GammaLevel&) = delete;
  GammaLevel& operator=(const GammaLevel&) = delete;

  const PrimeCtx* ctx() const { return P_; }
  int level() const { return n_; }
  int size() const { return N_; }  // q^{dn}
  const Poly& rep_of(int idx) const { return reps_[idx]; }
  int index_of(const Poly& rep) const;  // rep a one-unit, taken mod pi^{n+1}
  int mul(int a, int b) const { return perm_[static_cast<std::size_t>(a) * N_ + b]; }
  int inv(int a) const { return inv_[a]; }
  const int* mul_row(int a) const { return perm_.data() + static_cast<std::size_t>(a) * N_; }

 private:
  const PrimeCtx* P_;
  int n_, N_, digits_;
  std::vector<Poly> reps_;
  std::vector<int> perm_, inv_;
};

// Index map Gamma_from -> Gamma_to induced by reduction mod pi^{to.level+1};
// requires to.level() <= from.level() over the same prime.
std::vector<int> projection_indices(const GammaLevel& from, const GammaLevel& to);

// Element of F_{q^d}[Gamma_n], dense over group indices, coefficients stored
// as residue codes of the underlying PrimeCtx.
class GroupRingElem {
 public:
  GroupRingElem() = default;
  explicit GroupRingElem(const GammaLevel* G);
  static GroupRingElem unit(const GammaLevel* G);  // 1 * [identity]

  const GammaLevel* group() const { return G_; }
  int coeff(int idx) const { return c_[idx]; }
  void set_coeff(int idx, int v) { c_[idx] = v; }
  const std::vector<int>& coeffs() const { return c_; }
  bool zero() const;

  GroupRingElem operator+(const GroupRingElem& o) const;
  GroupRingElem operator-(const GroupRingElem& o) const;
  GroupRingElem operator*(const GroupRingElem& o) const;  // convolution
  GroupRingElem scaled(int rescode) const;
  GroupRingElem translated(int gidx) const;  // left multiply by [gidx]
  bool operator==(const GroupRingElem& o) const { return G_ == o.G_ && c_ == o.c_; }
  bool operator!=(const GroupRingElem& o) const { return !(*this == o); }

 private:
  const GammaLevel* G_ = nullptr;
  std::vector<int> c_;
};

// dst += s * [g] * src; the inner kernel of the Euler product.
void add_scaled_translate(GroupRingElem& dst, const GroupRingElem& src, int gidx, int scode);

GroupRingElem norm_element(const GammaLevel* G);  // sum of all group elements

// Frobenius data of a monic irreducible piq != pi at one level: the residue
// code of piq mod pi and the index of its one-unit part in Gamma_n.
struct FrobData {
  int delta;
  int gamma;
};
FrobData frobenius_decompose(const PrimeCtx* P, const GammaLevel& G, const Poly& piq);

}  // namespace carlgoss
