#pragma once

#include <vector>

#include "carlgoss/poly.hpp"

namespace carlgoss {

// S_n(j): the sum of a^j over the q^n monic a of degree n. Exact in A.
Poly power_sum(const Fq* F, int n, long long j);

// S_n(j) for every 0 <= j <= jmax at a fixed n. One incremental multiply per
// exponent step instead of a fresh powering chain per j, so a whole table
// costs barely more than its largest entry.
std::vector<Poly> power_sum_sweep(const Fq* F, int n, long long jmax, int threads = 1);

// Largest n with S_n(j) possibly nonzero: floor(log_q(j + 1)).
int zeta_degree_bound(const Fq* F, long long j);

// Z(X, j) = sum_n S_n(j) X^n, returned as its coefficient list with trailing
// zeros trimmed (never empty; Z(X, 0) == 1).
std::vector<Poly> zeta_polynomial(const Fq* F, long long j);

Poly zeta_at_one(const Fq* F, long long j);  // Z(1, j)

// beta(j): Z(1, j) away from the forced zeros, else -dZ/dX at X = 1.
Poly bernoulli_goss(const Fq* F, long long j);

// beta(0), ..., beta(jmax) from shared power-sum sweeps.
std::vector<Poly> bernoulli_table(const Fq* F, long long jmax, int threads = 1);

}  // namespace carlgoss
