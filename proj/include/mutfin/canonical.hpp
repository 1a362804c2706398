#pragma once

// Relabeling-invariant canonical forms. Two matrices get the same form iff
// they differ by a permutation of mutable indices (rows, columns, d) composed
// with a permutation of frozen rows.

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "mutfin/matrix.hpp"

namespace mutfin {

using CanonicalForm = std::string;

namespace detail {

// Exact (hash-free) color refinement on mutable vertices. Colors are ordinals
// of sorted invariant signatures, so equal colors across relabelings of the
// same matrix always correspond.
inline std::vector<int> refine_colors(const ExchangeMatrix& m) {
  const int n = m.num_mutable();
  const int rows = m.num_rows();

  using Sig = std::vector<std::int64_t>;
  std::vector<int> color(n, 0);

  auto initial = [&](int i) {
    Sig s;
    s.push_back(m.symmetrizer()[i]);
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    for (int j = 0; j < n; ++j)
      if (j != i && (m.at(i, j) != 0 || m.at(j, i) != 0)) pairs.emplace_back(m.at(i, j), m.at(j, i));
    std::sort(pairs.begin(), pairs.end());
    for (auto& p : pairs) {
      s.push_back(p.first);
      s.push_back(p.second);
    }
    s.push_back(std::numeric_limits<std::int64_t>::min());  // delimiter
    std::vector<std::int64_t> fr;
    for (int r = m.num_mutable(); r < rows; ++r) fr.push_back(m.at(r, i));
    std::sort(fr.begin(), fr.end());
    for (auto v : fr) s.push_back(v);
    return s;
  };

  {
    std::map<Sig, std::vector<int>> buckets;
    for (int i = 0; i < n; ++i) buckets[initial(i)].push_back(i);
    int c = 0;
    for (auto& [sig, members] : buckets) {
      for (int i : members) color[i] = c;
      ++c;
    }
  }

  for (;;) {
    std::map<std::pair<int, Sig>, std::vector<int>> buckets;
    for (int i = 0; i < n; ++i) {
      std::vector<std::array<std::int64_t, 3>> nb;
      for (int j = 0; j < n; ++j)
        if (j != i && (m.at(i, j) != 0 || m.at(j, i) != 0))
          nb.push_back({static_cast<std::int64_t>(color[j]), m.at(i, j), m.at(j, i)});
      std::sort(nb.begin(), nb.end());
      Sig s;
      for (auto& t : nb) {
        s.push_back(t[0]);
        s.push_back(t[1]);
        s.push_back(t[2]);
      }
      buckets[{color[i], s}].push_back(i);
    }
    std::vector<int> next(n);
    int c = 0;
    for (auto& [key, members] : buckets) {
      for (int i : members) next[i] = c;
      ++c;
    }
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

// Key compared during the search: d permuted, principal block row-major,
// then frozen rows (each permuted, then sorted as whole rows).
inline std::vector<std::int64_t> label_key(const ExchangeMatrix& m, const std::vector<int>& perm) {
  const int n = m.num_mutable();
  std::vector<std::int64_t> key;
  key.reserve(n + n * n + m.num_frozen() * n);
  for (int i = 0; i < n; ++i) key.push_back(m.symmetrizer()[perm[i]]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) key.push_back(m.at(perm[i], perm[j]));
  std::vector<std::vector<std::int64_t>> fr;
  for (int r = n; r < m.num_rows(); ++r) {
    std::vector<std::int64_t> row(n);
    for (int j = 0; j < n; ++j) row[j] = m.at(r, perm[j]);
    fr.push_back(std::move(row));
  }
  std::sort(fr.begin(), fr.end());
  for (auto& row : fr)
    for (auto v : row) key.push_back(v);
  return key;
}

struct CanonSearch {
  const ExchangeMatrix& m;
  const std::vector<int>& color;
  int n;
  std::vector<int> best_perm;
  std::vector<std::int64_t> best_key;
  std::vector<int> perm;
  std::vector<bool> used;

  CanonSearch(const ExchangeMatrix& mm, const std::vector<int>& col)
      : m(mm), color(col), n(mm.num_mutable()), perm(n), used(n, false) {}

  // Prefix prune: compare the rows determined so far against the best key.
  // Only the principal block participates in pruning; ties fall through to
  // the full key comparison at the leaves.
  void run() {
    place(0);
  }

  void place(int pos) {
    if (pos == n) {
      auto key = label_key(m, perm);
      if (best_key.empty() || key < best_key) {
        best_key = std::move(key);
        best_perm = perm;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      // candidates must come in nondecreasing color order
      if (pos > 0 && color[v] < color[perm[pos - 1]]) continue;
      bool class_ok = true;
      for (int u = 0; u < n; ++u)
        if (!used[u] && color[u] < color[v]) {
          class_ok = false;
          break;
        }
      if (!class_ok) continue;
      perm[pos] = v;
      if (!prefix_worse(pos)) {
        used[v] = true;
        place(pos + 1);
        used[v] = false;
      }
    }
  }

  // True when the partial labeling already compares strictly greater than the
  // current best on the decided prefix of the key.
  bool prefix_worse(int pos) {
    if (best_key.empty()) return false;
    // decided entries: d[0..pos], and principal rows 0..pos restricted to cols 0..pos
    for (int i = 0; i <= pos; ++i) {
      std::int64_t mine = m.symmetrizer()[perm[i]];
      if (mine != best_key[i]) return mine > best_key[i];
    }
    for (int i = 0; i <= pos; ++i)
      for (int j = 0; j <= pos; ++j) {
        std::int64_t mine = m.at(perm[i], perm[j]);
        std::int64_t theirs = best_key[n + i * n + j];
        if (mine != theirs) return mine > theirs;
      }
    return false;
  }
};

}  // namespace detail

// Permutation realizing the canonical labeling: vertex i of the canonical
// matrix is vertex perm[i] of the input.
inline std::vector<int> canonical_permutation(const ExchangeMatrix& m) {
  auto color = detail::refine_colors(m);
  detail::CanonSearch search(m, color);
  search.run();
  return search.best_perm;
}

inline CanonicalForm canonical_form(const ExchangeMatrix& m) {
  auto perm = canonical_permutation(m);
  auto key = detail::label_key(m, perm);
  std::string out;
  out.reserve(key.size() * 8 + 16);
  auto put = [&out](std::int64_t v) {
    out.append(reinterpret_cast<const char*>(&v), sizeof v);
  };
  put(m.num_mutable());
  put(m.num_rows());
  for (auto v : key) put(v);
  return out;
}

inline ExchangeMatrix canonical_matrix(const ExchangeMatrix& m) {
  ExchangeMatrix p = m.permuted(canonical_permutation(m));
  if (p.num_frozen() <= 1) return p;
  // sort frozen rows so the matrix matches its own form byte for byte
  auto e = p.entries();
  std::sort(e.begin() + p.num_mutable(), e.end());
  return ExchangeMatrix::create(std::move(e), p.num_mutable(), p.symmetrizer());
}

inline bool are_isomorphic(const ExchangeMatrix& a, const ExchangeMatrix& b) {
  if (a.num_mutable() != b.num_mutable() || a.num_rows() != b.num_rows()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace mutfin
