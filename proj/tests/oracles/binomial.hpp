#pragma once

// Counting oracles computed by direct enumeration.

#include <cstdint>

namespace oracle {

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// dim of the h-eigenspace of eigenvalue w on degree-i forms of H^n: the complex
// coframe dz_P ^ dzbar_Q has h = |P| - |Q|.
inline std::int64_t eigenspace_dim(int n, int i, int w) {
  if ((i + w) % 2 != 0) return 0;
  return binomial(2 * n, (i + w) / 2) * binomial(2 * n, (i - w) / 2);
}

inline std::int64_t multiplicity(int n, int i, int k) {
  return eigenspace_dim(n, i, k) - eigenspace_dim(n, i, k + 2);
}

}  // namespace oracle
