#include "carlgoss/groupring.hpp"

#include <cstddef>

#include "carlgoss/common.hpp"

namespace carlgoss {

namespace {

constexpr long long kMaxGamma = 1 << 20;

}  // namespace

GammaLevel::GammaLevel(const PrimeCtx* P, int n) : P_(P), n_(n) {
  if (n < 0) throw precondition_error("GammaLevel: level must be >= 0");
  const Fq* F = P->field();
  digits_ = P->d() * n;
  long long N = 1;
  for (int k = 0; k < digits_; ++k) {
    N *= F->q();
    if (N > kMaxGamma) throw precondition_error("GammaLevel: group too large to tabulate");
  }
  N_ = static_cast<int>(N);

  reps_.reserve(N_);
  Poly one = Poly::constant(F, 1);
  for (int idx = 0; idx < N_; ++idx) {
    std::vector<fq_code> h(digits_, 0);
    int rest = idx;
    for (int k = 0; k < digits_; ++k) {
      h[k] = static_cast<fq_code>(rest % F->q());
      rest /= F->q();
    }
    reps_.push_back(one + P->pi() * Poly(F, h));
  }

  perm_.resize(static_cast<std::size_t>(N_) * N_);
  int M = n_ + 1;
  for (int a = 0; a < N_; ++a) {
    int* row = perm_.data() + static_cast<std::size_t>(a) * N_;
    for (int b = 0; b < N_; ++b) row[b] = index_of(P->reduce(reps_[a] * reps_[b], M));
  }
  inv_.assign(N_, -1);
  for (int a = 0; a < N_; ++a) {
    const int* row = mul_row(a);
    for (int b = 0; b < N_; ++b)
      if (row[b] == 0) {
        inv_[a] = b;
        break;
      }
  }
}

int GammaLevel::index_of(const Poly& rep) const {
  const Fq* F = P_->field();
  Poly r = P_->reduce(rep, n_ + 1);
  Poly h = r - Poly::constant(F, 1);
  auto [quot, rem] = divrem(h, P_->pi());
  if (!rem.zero() || quot.degree() >= digits_)
    throw precondition_error("GammaLevel: not a one-unit at this level");
  long long idx = 0;
  for (int k = quot.degree(); k >= 0; --k) idx = idx * F->q() + quot.coeff(k);
  return static_cast<int>(idx);
}

std::vector<int> projection_indices(const GammaLevel& from, const GammaLevel& to) {
  if (from.ctx() != to.ctx() || to.level() > from.level())
    throw precondition_error("projection_indices: levels incompatible");
  std::vector<int> out(from.size());
  for (int idx = 0; idx < from.size(); ++idx) out[idx] = to.index_of(from.rep_of(idx));
  return out;
}

GroupRingElem::GroupRingElem(const GammaLevel* G) : G_(G), c_(G->size(), 0) {}

GroupRingElem GroupRingElem::unit(const GammaLevel* G) {
  GroupRingElem e(G);
  e.c_[0] = 1;
  return e;
}

bool GroupRingElem::zero() const {
  for (int v : c_)
    if (v != 0) return false;
  return true;
}

GroupRingElem GroupRingElem::operator+(const GroupRingElem& o) const {
  if (G_ != o.G_) throw precondition_error("group ring: level mismatch");
  const PrimeCtx* P = G_->ctx();
  GroupRingElem out(G_);
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = P->res_add(c_[k], o.c_[k]);
  return out;
}

GroupRingElem GroupRingElem::operator-(const GroupRingElem& o) const {
  if (G_ != o.G_) throw precondition_error("group ring: level mismatch");
  const PrimeCtx* P = G_->ctx();
  GroupRingElem out(G_);
  for (std::size_t k = 0; k < c_.size(); ++k)
    out.c_[k] = P->res_add(c_[k], P->res_neg(o.c_[k]));
  return out;
}

GroupRingElem GroupRingElem::operator*(const GroupRingElem& o) const {
  if (G_ != o.G_) throw precondition_error("group ring: level mismatch");
  const PrimeCtx* P = G_->ctx();
  GroupRingElem out(G_);
  for (int a = 0; a < G_->size(); ++a) {
    if (c_[a] == 0) continue;
    const int* row = G_->mul_row(a);
    for (int b = 0; b < G_->size(); ++b) {
      if (o.c_[b] == 0) continue;
      int& slot = out.c_[row[b]];
      slot = P->res_add(slot, P->res_mul(c_[a], o.c_[b]));
    }
  }
  return out;
}

GroupRingElem GroupRingElem::scaled(int rescode) const {
  const PrimeCtx* P = G_->ctx();
  GroupRingElem out(G_);
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[k] = P->res_mul(rescode, c_[k]);
  return out;
}

GroupRingElem GroupRingElem::translated(int gidx) const {
  GroupRingElem out(G_);
  const int* row = G_->mul_row(gidx);
  for (int b = 0; b < G_->size(); ++b) out.c_[row[b]] = c_[b];
  return out;
}

void add_scaled_translate(GroupRingElem& dst, const GroupRingElem& src, int gidx,
                          int scode) {
  const GammaLevel* G = dst.group();
  if (G != src.group()) throw precondition_error("group ring: level mismatch");
  const PrimeCtx* P = G->ctx();
  const int* row = G->mul_row(gidx);
  for (int b = 0; b < G->size(); ++b) {
    int v = src.coeff(b);
    if (v == 0) continue;
    int tgt = row[b];
    dst.set_coeff(tgt, P->res_add(dst.coeff(tgt), P->res_mul(scode, v)));
  }
}

GroupRingElem norm_element(const GammaLevel* G) {
  GroupRingElem out(G);
  for (int k = 0; k < G->size(); ++k) out.set_coeff(k, 1);
  return out;
}

FrobData frobenius_decompose(const PrimeCtx* P, const GammaLevel& G, const Poly& piq) {
  if (piq == P->pi() || divrem(piq, P->pi()).second.zero())
    throw precondition_error("frobenius_decompose: prime must avoid pi");
  int M = G.level() + 1;
  PadicElem a(P, P->reduce(piq, M), M);
  FrobData out;
  out.delta = P->res_code(piq);
  out.gamma = G.index_of(one_unit_part(a).rep());
  return out;
}

}  // namespace carlgoss
