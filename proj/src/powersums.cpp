#include "carlgoss/powersums.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>

#include "carlgoss/common.hpp"

namespace carlgoss {

namespace {

// buf *= a, in place. buf holds little-endian coefficients up to old_deg and
// zeros above; writing descending keeps every read below the write index.
void mul_in_place_mod_p(std::vector<fq_code>& buf, int old_deg,
                        const std::vector<fq_code>& a, int p) {
  int n = static_cast<int>(a.size()) - 1;
  for (int k = old_deg + n; k >= 0; --k) {
    long long s = 0;
    int lo = std::max(0, k - old_deg);
    int hi = std::min(n, k);
    for (int i = lo; i <= hi; ++i) s += static_cast<long long>(a[i]) * buf[k - i];
    buf[k] = static_cast<fq_code>(s % p);
  }
}

void mul_in_place_tables(std::vector<fq_code>& buf, int old_deg,
                         const std::vector<fq_code>& a, const Fq* F) {
  const fq_code* add = F->add_table();
  const fq_code* mul = F->mul_table();
  int q = F->q();
  int n = static_cast<int>(a.size()) - 1;
  for (int k = old_deg + n; k >= 0; --k) {
    fq_code s = 0;
    int lo = std::max(0, k - old_deg);
    int hi = std::min(n, k);
    for (int i = lo; i <= hi; ++i) s = add[s * q + mul[a[i] * q + buf[k - i]]];
    buf[k] = s;
  }
}

// Accumulate a^j for j = 0..jmax into acc, a flat (jmax+1) x width table.
void sweep_one(const Poly& a, long long jmax, std::size_t width,
               std::vector<fq_code>& acc, std::vector<fq_code>& cur, const Fq* F) {
  bool prime = F->prime_field();
  int p = F->p();
  int n = a.degree();
  std::fill(cur.begin(), cur.end(), fq_code{0});
  cur[0] = 1;
  int deg = 0;
  for (long long j = 0; j <= jmax; ++j) {
    fq_code* row = acc.data() + static_cast<std::size_t>(j) * width;
    if (prime) {
      for (int k = 0; k <= deg; ++k) {
        int s = row[k] + cur[k];
        row[k] = static_cast<fq_code>(s >= p ? s - p : s);
      }
    } else {
      const fq_code* add = F->add_table();
      int q = F->q();
      for (int k = 0; k <= deg; ++k) row[k] = add[row[k] * q + cur[k]];
    }
    if (j == jmax) break;
    if (prime) {
      mul_in_place_mod_p(cur, deg, a.coeffs(), p);
    } else {
      mul_in_place_tables(cur, deg, a.coeffs(), F);
    }
    deg += n;
  }
}

}  // namespace

Poly power_sum(const Fq* F, int n, long long j) {
  if (n < 0 || j < 0) throw precondition_error("power_sum: n and j must be nonnegative");
  Poly acc(F);
  for_each_monic(F, n, [&](const Poly& a) { acc = acc + a.pow(j); });
  return acc;
}

std::vector<Poly> power_sum_sweep(const Fq* F, int n, long long jmax, int threads) {
  if (n < 0 || jmax < 0)
    throw precondition_error("power_sum_sweep: n and jmax must be nonnegative");
  std::size_t width = static_cast<std::size_t>(n) * static_cast<std::size_t>(jmax) + 1;
  std::vector<Poly> monics = monic_polys(F, n);
  std::size_t cnt = monics.size();
  int T = std::max(1, std::min<int>(threads, static_cast<int>(cnt)));

  std::vector<std::vector<fq_code>> local(
      T, std::vector<fq_code>(static_cast<std::size_t>(jmax + 1) * width, 0));
  std::vector<std::thread> pool;
  std::exception_ptr err;
  std::mutex err_mu;
  for (int t = 0; t < T; ++t) {
    pool.emplace_back([&, t]() {
      try {
        std::vector<fq_code> cur(width, 0);
        std::size_t lo = cnt * t / T, hi = cnt * (t + 1) / T;
        for (std::size_t idx = lo; idx < hi; ++idx)
          sweep_one(monics[idx], jmax, width, local[t], cur, F);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);

  // exact field sums commute, so the merge order cannot change the result
  for (int t = 1; t < T; ++t) {
    if (F->prime_field()) {
      int p = F->p();
      for (std::size_t k = 0; k < local[0].size(); ++k) {
        int s = local[0][k] + local[t][k];
        local[0][k] = static_cast<fq_code>(s >= p ? s - p : s);
      }
    } else {
      const fq_code* add = F->add_table();
      int q = F->q();
      for (std::size_t k = 0; k < local[0].size(); ++k)
        local[0][k] = add[local[0][k] * q + local[t][k]];
    }
  }

  std::vector<Poly> out;
  out.reserve(jmax + 1);
  for (long long j = 0; j <= jmax; ++j) {
    const fq_code* row = local[0].data() + static_cast<std::size_t>(j) * width;
    out.emplace_back(F, std::vector<fq_code>(row, row + width));
  }
  return out;
}

int zeta_degree_bound(const Fq* F, long long j) {
  if (j < 0) throw precondition_error("zeta_degree_bound: j must be nonnegative");
  int k = 0;
  long long pw = 1;
  while (pw <= (j + 1) / F->q()) {
    pw *= F->q();
    ++k;
  }
  return k;
}

std::vector<Poly> zeta_polynomial(const Fq* F, long long j) {
  int nmax = zeta_degree_bound(F, j);
  std::vector<Poly> z;
  z.reserve(nmax + 1);
  for (int n = 0; n <= nmax; ++n) z.push_back(power_sum(F, n, j));
  while (z.size() > 1 && z.back().zero()) z.pop_back();
  return z;
}

Poly zeta_at_one(const Fq* F, long long j) {
  Poly acc(F);
  for (const Poly& c : zeta_polynomial(F, j)) acc = acc + c;
  return acc;
}

namespace {

Poly beta_from_coeffs(const Fq* F, const std::vector<Poly>& z, long long j) {
  bool forced = j >= 1 && j % (F->q() - 1) == 0;
  Poly acc(F);
  for (std::size_t n = 0; n < z.size(); ++n) {
    if (forced) {
      fq_code c = F->neg(static_cast<fq_code>(n % F->p()));
      acc = acc + z[n].scaled(c);
    } else {
      acc = acc + z[n];
    }
  }
  return acc;
}

}  // namespace

Poly bernoulli_goss(const Fq* F, long long j) {
  return beta_from_coeffs(F, zeta_polynomial(F, j), j);
}

std::vector<Poly> bernoulli_table(const Fq* F, long long jmax, int threads) {
  int nmax = zeta_degree_bound(F, jmax);
  std::vector<std::vector<Poly>> S(nmax + 1);
  for (int n = 0; n <= nmax; ++n) S[n] = power_sum_sweep(F, n, jmax, threads);
  std::vector<Poly> out;
  out.reserve(jmax + 1);
  for (long long j = 0; j <= jmax; ++j) {
    std::vector<Poly> z;
    z.reserve(nmax + 1);
    for (int n = 0; n <= nmax; ++n) z.push_back(S[n][j]);
    out.push_back(beta_from_coeffs(F, z, j));
  }
  return out;
}

}  // namespace carlgoss
