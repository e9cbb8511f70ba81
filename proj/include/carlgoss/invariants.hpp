#pragma once

#include <vector>

#include "carlgoss/lfunction.hpp"
#include "carlgoss/theta.hpp"

namespace carlgoss {

struct MClassRow {
  long long y;  // class representative mod p^m
  long long j;  // the positive exponent the exact path evaluated at
  int v;        // valuation of the special value, or the floor M
  bool floor;   // true: only v >= M is certified for this class
};

struct MInvariant {
  long long i = 0;
  bool forced = false;  // (q-1) | i: the value at 1 vanishes, use d/dX
  bool resolved = false;
  int value = -1;
  int M = 0;  // working precision of the final round
  int m = 0;  // class digits: rows cover y mod p^m
  long long witness_y = -1;
  long long witness_j = -1;
  std::vector<MClassRow> rows;
};

// Infimum over p-adic y of the valuation of L(1, y) (or of the X-derivative
// at 1 when the value itself is forced to vanish). A congruence class pins
// its valuation as soon as the special value is nonzero mod pi^M, and any
// pinned class below M settles the infimum, because every other class sits
// at M or higher. Otherwise the precision doubles up to M_cap and the result
// comes back unresolved. M_init == -1 seeds odd-type indices from the degree
// estimate floor((i/d) log_q(i+1)) + 2.
MInvariant m_invariant(const PrimeCtx* P, long long i, int M_init = -1, int M_cap = 64);

// Recompute every row of the certificate through the direct enumeration
// path, truncated at the row's own degree bound d + floor(log_q(j+1)).
bool verify_m_certificate(const PrimeCtx* P, const MInvariant& mi, int threads = 1);

// resolved value against the ceiling (i/d) log_q(i+1)
bool m_degree_bound_check(const PrimeCtx* P, const MInvariant& mi);

struct InequalityRow {
  long long i = 0;
  bool n_found = false;
  int n_value = -1;
  MInvariant m;  // at the reflected index q^d - 1 - i
  bool ok = false;
};

// The vanishing order of the sharpened Stickelberger tower at index i
// against the m-invariant at the reflected index: N(i) <= m(-i).
InequalityRow inequality_report(Tower& tw, long long i, int n_max);

}  // namespace carlgoss
