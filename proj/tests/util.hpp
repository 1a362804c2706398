#pragma once

// Shared generators for randomized tests.

#include <random>

#include "mutfin/matrix.hpp"

namespace testutil {

using mutfin::ExchangeMatrix;

// Random skew-symmetrizable matrix: B = diag(d) * A with A skew-symmetric.
// Entries stay in [-3, 3] for |A| <= 1, d in {1,2,3}.
inline ExchangeMatrix random_matrix(std::mt19937_64& rng, int max_n = 8, int frozen_rows = 0,
                                    bool skew_symmetric = false) {
  std::uniform_int_distribution<int> nd(2, max_n), a(-1, 1), dd(1, 3), f(-3, 3);
  const int n = nd(rng);
  std::vector<std::int64_t> d(n, 1);
  if (!skew_symmetric)
    for (auto& v : d) v = dd(rng);
  std::vector<std::vector<std::int64_t>> e(n + frozen_rows, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int x = a(rng);
      e[i][j] = d[i] * x;
      e[j][i] = -d[j] * x;
    }
  for (int r = 0; r < frozen_rows; ++r)
    for (int j = 0; j < n; ++j) e[n + r][j] = f(rng);
  return ExchangeMatrix::create(std::move(e), n);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testutil
