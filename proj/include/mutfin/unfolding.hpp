#pragma once

// Unfoldings of skew-symmetrizable matrices: block-sum validation, composite
// mutations, frozen-row extension, and the canned fixture list.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mutfin/matrix.hpp"

namespace mutfin {

// base is n x n skew-symmetrizable with symmetrizer d; index_sets partition
// 0..m-1 into E_1..E_n with |E_i| = d_i; unfolded is an m x m skew-symmetric
// matrix, optionally carrying the same number of frozen rows as base.
struct UnfoldingSpec {
  ExchangeMatrix base;
  std::vector<std::vector<int>> index_sets;
  ExchangeMatrix unfolded;
};

// Block conditions: every column of the E_i x E_j block of the unfolded
// matrix sums to b_ij, and the block is entrywise nonnegative when
// b_ij >= 0. Frozen rows must replicate each base entry d_j times over E_j.
inline void validate_unfolding(const UnfoldingSpec& u) {
  const int n = u.base.num_mutable();
  const int m = u.unfolded.num_mutable();
  if (static_cast<int>(u.index_sets.size()) != n)
    throw Error(Errc::DimensionMismatch, "need one index set per base vertex");

  std::vector<int> owner(m, -1);
  std::int64_t total = 0;
  for (int i = 0; i < n; ++i) {
    const auto& e = u.index_sets[i];
    if (static_cast<std::int64_t>(e.size()) != u.base.symmetrizer()[i])
      throw Error(Errc::DimensionMismatch,
                  "index set " + std::to_string(i) + " has size " + std::to_string(e.size()) +
                      ", symmetrizer entry is " + std::to_string(u.base.symmetrizer()[i]));
    total += static_cast<std::int64_t>(e.size());
    for (int v : e) {
      if (v < 0 || v >= m) throw Error(Errc::IndexMismatch, "index set member out of range");
      if (owner[v] != -1) throw Error(Errc::IndexMismatch, "index sets overlap");
      owner[v] = i;
    }
  }
  if (total != m)
    throw Error(Errc::DimensionMismatch, "index sets do not cover the unfolded matrix");

  for (const auto v : u.unfolded.symmetrizer())
    if (v != 1) throw Error(Errc::NotSkewSymmetrizable, "unfolded matrix must be skew-symmetric");

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const std::int64_t bij = u.base.at(i, j);
      for (int col : u.index_sets[j]) {
        std::int64_t sum = 0;
        for (int row : u.index_sets[i]) {
          const std::int64_t c = u.unfolded.at(row, col);
          if (bij >= 0 && c < 0)
            throw Error(Errc::Condition2Violated,
                        "negative entry (" + std::to_string(row) + "," + std::to_string(col) +
                            ") in block (" + std::to_string(i) + "," + std::to_string(j) +
                            ") with b=" + std::to_string(bij));
          sum = checked_add(sum, c);
        }
        if (sum != bij)
          throw Error(Errc::Condition1Violated,
                      "column " + std::to_string(col) + " of block (" + std::to_string(i) + "," +
                          std::to_string(j) + ") sums to " + std::to_string(sum) +
                          ", expected " + std::to_string(bij));
      }
    }

  if (u.unfolded.num_frozen() != u.base.num_frozen())
    throw Error(Errc::FrozenBlockMismatch, "frozen row counts differ");
  for (int r = 0; r < u.base.num_frozen(); ++r)
    for (int j = 0; j < n; ++j)
      for (int col : u.index_sets[j])
        if (u.unfolded.at(m + r, col) != u.base.at(n + r, j))
          throw Error(Errc::FrozenBlockMismatch,
                      "frozen row " + std::to_string(r) + " over set " + std::to_string(j) +
                          " is not a constant copy of the base entry");
}

// Composite mutation at base index i: mutate the unfolded matrix at every
// member of E_i (these commute only when no two members are adjacent) and
// the base at i. The result is revalidated.
inline UnfoldingSpec composite_mutate(const UnfoldingSpec& u, int i) {
  const int n = u.base.num_mutable();
  if (i < 0 || i >= n) throw Error(Errc::FrozenIndex, "composite index out of range");
  const auto& e = u.index_sets[i];
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (u.unfolded.at(e[a], e[b]) != 0)
        throw Error(Errc::CommutationFailure,
                    "vertices " + std::to_string(e[a]) + " and " + std::to_string(e[b]) +
                        " of set " + std::to_string(i) + " are adjacent");
  UnfoldingSpec out{u.base.mutate(i), u.index_sets, u.unfolded};
  for (int v : e) out.unfolded = out.unfolded.mutate(v);
  validate_unfolding(out);
  return out;
}

// Lifts a base coefficient vector: block E_j of the lifted vector holds d_j
// copies of b_j. Returns the unfolded matrix extended by the lifted row.
// Mutation finiteness of the result is sufficient for admissibility of b on
// the base, never necessary.
inline ExchangeMatrix unfold_extended(const UnfoldingSpec& u, const CoefficientVector& b) {
  const int n = u.base.num_mutable();
  if (static_cast<int>(b.size()) != n)
    throw Error(Errc::DimensionMismatch, "coefficient vector size != base rank");
  CoefficientVector lifted(u.unfolded.num_mutable(), 0);
  for (int j = 0; j < n; ++j)
    for (int col : u.index_sets[j]) lifted[col] = b[j];
  return u.unfolded.with_coefficients(lifted);
}

// Bounded stand-in for the unquantifiable "every sequence" clause: validation
// is rechecked along `trials` random composite-mutation sequences of length
// <= max_len. Throws on the first violation.
inline void certify_unfolding(const UnfoldingSpec& u, int trials = 1000, int max_len = 12,
                              std::uint64_t seed = 12345) {
  validate_unfolding(u);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, u.base.num_mutable() - 1);
  std::uniform_int_distribution<int> len(1, max_len);
  for (int t = 0; t < trials; ++t) {
    UnfoldingSpec cur = u;
    const int l = len(rng);
    for (int s = 0; s < l; ++s) cur = composite_mutate(cur, pick(rng));
  }
}

namespace unfoldings {

// Weight-16 rank 2 matrix with symmetrizer (1, 4); the unfolded quiver is a
// 4-arrow star.
inline UnfoldingSpec rank2_d14() {
  auto base = ExchangeMatrix::create({{0, 1}, {-4, 0}}, 2);
  auto c = ExchangeMatrix::create({{0, 1, 1, 1, 1},
                                   {-1, 0, 0, 0, 0},
                                   {-1, 0, 0, 0, 0},
                                   {-1, 0, 0, 0, 0},
                                   {-1, 0, 0, 0, 0}},
                                  5);
  return {base, {{0}, {1, 2, 3, 4}}, c};
}

// Affine tripod with edge weights 1 and 3; unfolds to the 4-leaf star by
// merging three leaves.
inline UnfoldingSpec g2_affine() {
  auto base = ExchangeMatrix::create({{0, 1, 0}, {-1, 0, -1}, {0, 3, 0}}, 3);
  auto c = ExchangeMatrix::create({{0, 1, 0, 0, 0},
                                   {-1, 0, -1, -1, -1},
                                   {0, 1, 0, 0, 0},
                                   {0, 1, 0, 0, 0},
                                   {0, 1, 0, 0, 0}},
                                  5);
  return {base, {{0}, {1}, {2, 3, 4}}, c};
}

// Affine 5-vertex path with one weight-2 edge; unfolds to the 7-vertex
// three-legged tree by merging the two long legs.
inline UnfoldingSpec f4_affine() {
  auto base = ExchangeMatrix::create(
      {{0, 1, 0, 0, 0}, {-1, 0, 2, 0, 0}, {0, -1, 0, 1, 0}, {0, 0, -1, 0, 1}, {0, 0, 0, -1, 0}},
      5);
  std::vector<std::vector<std::int64_t>> e(7, std::vector<std::int64_t>(7, 0));
  auto arrow = [&](int a, int b) { e[a][b] = 1; e[b][a] = -1; };
  arrow(0, 2);  // first leg
  arrow(1, 3);  // second leg
  arrow(2, 4);
  arrow(3, 4);
  arrow(4, 5);  // short leg
  arrow(5, 6);
  return {base, {{0, 1}, {2, 3}, {4}, {5}, {6}}, ExchangeMatrix::create(std::move(e), 7)};
}

// Affine path with a fork at one end and a weight-2 edge at the other;
// unfolds to the fork-path-fork tree by merging the far prongs. n >= 3
// base vertices plus the merged pair.
inline UnfoldingSpec b_affine(int n = 4) {
  if (n < 3) throw Error(Errc::DimensionMismatch, "need n >= 3");
  std::vector<std::vector<std::int64_t>> base(n + 1, std::vector<std::int64_t>(n + 1, 0));
  auto edge = [](auto& mat, int a, int b, std::int64_t f, std::int64_t g) {
    mat[a][b] = f;
    mat[b][a] = -g;
  };
  edge(base, 0, 2, 1, 1);  // two prongs into the chain head
  edge(base, 1, 2, 1, 1);
  for (int j = 2; j + 1 < n; ++j) edge(base, j, j + 1, 1, 1);
  edge(base, n - 1, n, 1, 2);  // weight-2 tail
  auto bm = ExchangeMatrix::create(std::move(base), n + 1);

  const int m = n + 2;
  std::vector<std::vector<std::int64_t>> e(m, std::vector<std::int64_t>(m, 0));
  auto arrow = [&](int a, int b) { e[a][b] = 1; e[b][a] = -1; };
  arrow(0, 2);
  arrow(1, 2);
  for (int j = 2; j + 1 < n; ++j) arrow(j, j + 1);
  arrow(n - 1, n);
  arrow(n - 1, n + 1);
  std::vector<std::vector<int>> sets;
  for (int j = 0; j < n; ++j) sets.push_back({j});
  sets.push_back({n, n + 1});
  return {bm, std::move(sets), ExchangeMatrix::create(std::move(e), m)};
}

// Affine path with weight-2 edges at both ends; unfolds to the even cycle
// with alternating halves by merging mirror-image vertices. n >= 2.
inline UnfoldingSpec c_affine(int n = 3) {
  if (n < 2) throw Error(Errc::DimensionMismatch, "need n >= 2");
  std::vector<std::vector<std::int64_t>> base(n + 1, std::vector<std::int64_t>(n + 1, 0));
  base[0][1] = 1;
  base[1][0] = -2;
  for (int j = 1; j + 1 < n; ++j) {
    base[j][j + 1] = 1;
    base[j + 1][j] = -1;
  }
  base[n - 1][n] = 2;
  base[n][n - 1] = -1;
  auto bm = ExchangeMatrix::create(std::move(base), n + 1);

  const int m = 2 * n;
  std::vector<std::vector<std::int64_t>> e(m, std::vector<std::int64_t>(m, 0));
  auto arrow = [&](int a, int b) { e[a][b] = 1; e[b][a] = -1; };
  // cycle 0,1,..,n,..,2n-1 with 0 a source and n a sink
  for (int j = 0; j < n; ++j) arrow(j, j + 1);
  arrow(0, m - 1);
  for (int j = m - 1; j > n; --j) arrow(j, j - 1);
  std::vector<std::vector<int>> sets{{0}};
  for (int j = 1; j < n; ++j) sets.push_back({j, m - j});
  sets.push_back({n});
  return {bm, std::move(sets), ExchangeMatrix::create(std::move(e), m)};
}

}  // namespace unfoldings

}  // namespace mutfin
