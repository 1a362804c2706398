#pragma once

// Exact integer exchange matrices with frozen rows, mutation, and the
// weighted-diagram view of the skew-symmetrizable case.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <tuple>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mutfin {

enum class Errc {
  NotSkewSymmetrizable,
  NonzeroDiagonal,
  Overflow,
  FrozenIndex,
  DimensionMismatch,
  EmptySubset,
  SelfFoldedTriangle,
  ExcludedSmallCase,
  NoBoundary,
  IndexMismatch,
  Condition1Violated,
  Condition2Violated,
  FrozenBlockMismatch,
  CommutationFailure,
  ParseError,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotSkewSymmetrizable: return "NotSkewSymmetrizable";
    case Errc::NonzeroDiagonal: return "NonzeroDiagonal";
    case Errc::Overflow: return "Overflow";
    case Errc::FrozenIndex: return "FrozenIndex";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptySubset: return "EmptySubset";
    case Errc::SelfFoldedTriangle: return "SelfFoldedTriangle";
    case Errc::ExcludedSmallCase: return "ExcludedSmallCase";
    case Errc::NoBoundary: return "NoBoundary";
    case Errc::IndexMismatch: return "IndexMismatch";
    case Errc::Condition1Violated: return "Condition1Violated";
    case Errc::Condition2Violated: return "Condition2Violated";
    case Errc::FrozenBlockMismatch: return "FrozenBlockMismatch";
    case Errc::CommutationFailure: return "CommutationFailure";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Checked 64-bit arithmetic. Entries of mutation-infinite classes grow without
// bound; wraparound would silently corrupt verdicts.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer addition overflow");
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer multiplication overflow");
  return r;
}

inline int sgn(std::int64_t x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }
inline std::int64_t pos_part(std::int64_t x) { return x > 0 ? x : 0; }

using MutationSequence = std::vector<int>;  // 0-based mutable indices

// Coefficient vector b: b_i arrows from mutable vertex i to a frozen vertex.
// The matrix stores the frozen row as -b.
using CoefficientVector = std::vector<std::int64_t>;

class ExchangeMatrix {
 public:
  // Builds a validated matrix. If no symmetrizer is given, the componentwise
  // minimal positive one is computed per connected component of the principal
  // part; fails with NotSkewSymmetrizable if none exists.
  static ExchangeMatrix create(std::vector<std::vector<std::int64_t>> entries, int num_mutable,
                               std::optional<std::vector<std::int64_t>> skew_symmetrizer = std::nullopt) {
    const int m = static_cast<int>(entries.size());
    const int n = num_mutable;
    if (n < 1 || n > m) throw Error(Errc::DimensionMismatch, "need 1 <= n <= m");
    for (const auto& row : entries)
      if (static_cast<int>(row.size()) != n)
        throw Error(Errc::DimensionMismatch, "entries not rectangular m x n");
    for (int i = 0; i < n; ++i)
      if (entries[i][i] != 0) throw Error(Errc::NonzeroDiagonal, "principal diagonal must be zero");

    std::vector<std::int64_t> d;
    if (skew_symmetrizer) {
      d = *skew_symmetrizer;
      if (static_cast<int>(d.size()) != n) throw Error(Errc::DimensionMismatch, "symmetrizer size != n");
      for (auto v : d)
        if (v <= 0) throw Error(Errc::NotSkewSymmetrizable, "symmetrizer entries must be positive");
      check_symmetrizable(entries, n, d);
    } else {
      d = find_symmetrizer(entries, n);
    }
    return ExchangeMatrix(std::move(entries), n, std::move(d));
  }

  int num_mutable() const { return n_; }
  int num_rows() const { return static_cast<int>(entries_.size()); }
  int num_frozen() const { return num_rows() - n_; }
  const std::vector<std::vector<std::int64_t>>& entries() const { return entries_; }
  std::int64_t at(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::int64_t>& symmetrizer() const { return d_; }

  bool operator==(const ExchangeMatrix& o) const {
    return n_ == o.n_ && entries_ == o.entries_ && d_ == o.d_;
  }
  bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }

  // Coefficient vector encoded by frozen row r (0-based among frozen rows).
  CoefficientVector coefficients(int r) const {
    if (r < 0 || r >= num_frozen()) throw Error(Errc::IndexMismatch, "frozen row index out of range");
    CoefficientVector b(n_);
    for (int j = 0; j < n_; ++j) b[j] = -entries_[n_ + r][j];
    return b;
  }

  // Principal part only (drops frozen rows).
  ExchangeMatrix mutable_part() const {
    std::vector<std::vector<std::int64_t>> e(entries_.begin(), entries_.begin() + n_);
    return ExchangeMatrix(std::move(e), n_, d_);
  }

  // Appends frozen row -b. Multiple frozen rows never interact.
  ExchangeMatrix with_coefficients(const CoefficientVector& b) const {
    if (static_cast<int>(b.size()) != n_)
      throw Error(Errc::DimensionMismatch, "coefficient vector size != n");
    auto e = entries_;
    std::vector<std::int64_t> row(n_);
    for (int j = 0; j < n_; ++j) row[j] = -b[j];
    e.push_back(std::move(row));
    return ExchangeMatrix(std::move(e), n_, d_);
  }

  // Mutation at mutable index k (0-based), applied to all rows.
  ExchangeMatrix mutate(int k) const {
    if (k < 0 || k >= n_)
      throw Error(Errc::FrozenIndex, "mutation index addresses a frozen or invalid row");
    const int m = num_rows();
    auto e = entries_;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (i == k || j == k) {
          e[i][j] = -entries_[i][j];
        } else {
          const std::int64_t bik = entries_[i][k];
          const std::int64_t bkj = entries_[k][j];
          e[i][j] = checked_add(entries_[i][j], checked_mul(sgn(bik), pos_part(checked_mul(bik, bkj))));
        }
      }
    }
    return ExchangeMatrix(std::move(e), n_, d_);
  }

  ExchangeMatrix apply(const MutationSequence& s) const {
    ExchangeMatrix m = *this;
    for (int k : s) m = m.mutate(k);
    return m;
  }

  ExchangeMatrix opposite() const {
    auto e = entries_;
    for (auto& row : e)
      for (auto& v : row) v = -v;
    return ExchangeMatrix(std::move(e), n_, d_);
  }

  // Induced submatrix on mutable indices S (0-based, any order given is
  // normalized ascending); frozen rows kept if keep_frozen.
  ExchangeMatrix restrict(std::vector<int> s, bool keep_frozen = false) const {
    if (s.empty()) throw Error(Errc::EmptySubset, "restriction to empty vertex set");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int i : s)
      if (i < 0 || i >= n_) throw Error(Errc::IndexMismatch, "restriction index out of range");
    std::vector<std::vector<std::int64_t>> e;
    std::vector<std::int64_t> d;
    for (int i : s) {
      std::vector<std::int64_t> row;
      for (int j : s) row.push_back(entries_[i][j]);
      e.push_back(std::move(row));
      d.push_back(d_[i]);
    }
    if (keep_frozen) {
      for (int r = n_; r < num_rows(); ++r) {
        std::vector<std::int64_t> row;
        for (int j : s) row.push_back(entries_[r][j]);
        e.push_back(std::move(row));
      }
    }
    return ExchangeMatrix(std::move(e), static_cast<int>(s.size()), std::move(d));
  }

  // Relabels mutable vertices: vertex i of the result is vertex perm[i] of
  // this matrix. Frozen rows keep their order.
  ExchangeMatrix permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_)
      throw Error(Errc::DimensionMismatch, "permutation size != n");
    std::vector<std::vector<std::int64_t>> e(num_rows(), std::vector<std::int64_t>(n_));
    std::vector<std::int64_t> d(n_);
    for (int i = 0; i < n_; ++i) {
      d[i] = d_[perm[i]];
      for (int j = 0; j < n_; ++j) e[i][j] = entries_[perm[i]][perm[j]];
    }
    for (int r = n_; r < num_rows(); ++r)
      for (int j = 0; j < n_; ++j) e[r][j] = entries_[r][perm[j]];
    return ExchangeMatrix(std::move(e), n_, std::move(d));
  }

 private:
  ExchangeMatrix(std::vector<std::vector<std::int64_t>> e, int n, std::vector<std::int64_t> d)
      : entries_(std::move(e)), n_(n), d_(std::move(d)) {}

  // Convention: B * diag(d) is skew-symmetric, i.e. b_ij * d_j == -b_ji * d_i.
  static void check_symmetrizable(const std::vector<std::vector<std::int64_t>>& e, int n,
                                  const std::vector<std::int64_t>& d) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (checked_mul(e[i][j], d[j]) != -checked_mul(e[j][i], d[i]))
          throw Error(Errc::NotSkewSymmetrizable, "matrix not skew-symmetrizable by given d");
  }

  static std::vector<std::int64_t> find_symmetrizer(const std::vector<std::vector<std::int64_t>>& e, int n) {
    // Propagate ratios over each connected component, then clear denominators
    // and normalize by the component gcd.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((e[i][j] == 0) != (e[j][i] == 0) || (e[i][j] != 0 && sgn(e[i][j]) != -sgn(e[j][i])))
          throw Error(Errc::NotSkewSymmetrizable, "opposite entries must have opposite signs");

    std::vector<std::int64_t> num(n, 0), den(n, 0);  // d_i proportional to num/den within component
    std::vector<int> comp(n, -1);
    for (int root = 0; root < n; ++root) {
      if (comp[root] != -1) continue;
      comp[root] = root;
      num[root] = den[root] = 1;
      std::vector<int> stack{root};
      std::vector<int> members{root};
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
          if (i == j || e[i][j] == 0) continue;
          // b_ij d_j = -b_ji d_i  =>  d_j / d_i = -b_ji / b_ij = |b_ji| / |b_ij|
          std::int64_t rn = checked_mul(num[i], std::abs(e[j][i]));
          std::int64_t rd = checked_mul(den[i], std::abs(e[i][j]));
          std::int64_t g = std::gcd(rn, rd);
          rn /= g;
          rd /= g;
          if (comp[j] == -1) {
            comp[j] = root;
            num[j] = rn;
            den[j] = rd;
            stack.push_back(j);
            members.push_back(j);
          } else if (num[j] != rn || den[j] != rd) {
            throw Error(Errc::NotSkewSymmetrizable, "inconsistent symmetrizer ratios on a cycle");
          }
        }
      }
      std::int64_t lcm_den = 1;
      for (int i : members) lcm_den = std::lcm(lcm_den, den[i]);
      std::int64_t g = 0;
      for (int i : members) {
        num[i] = checked_mul(num[i], lcm_den / den[i]);
        den[i] = 1;
        g = std::gcd(g, num[i]);
      }
      for (int i : members) num[i] /= g;
    }
    check_symmetrizable(e, n, num);
    return num;
  }

  std::vector<std::vector<std::int64_t>> entries_;
  int n_;
  std::vector<std::int64_t> d_;
};

// One weighted arrow of the diagram of the principal part.
struct DiagramArrow {
  int from, to;           // mutable indices, from -> to
  std::int64_t weight;    // |b_ij * b_ji|
  bool double_arrow;      // weight 4 with d_from == d_to
};

struct DiagramView {
  std::vector<DiagramArrow> arrows;

  bool operator==(const DiagramView& o) const {
    auto key = [](const DiagramView& v) {
      std::vector<std::tuple<int, int, std::int64_t>> k;
      for (const auto& a : v.arrows) k.emplace_back(a.from, a.to, a.weight);
      std::sort(k.begin(), k.end());
      return k;
    };
    return key(*this) == key(o);
  }
};

inline DiagramView diagram_view(const ExchangeMatrix& m) {
  DiagramView v;
  const int n = m.num_mutable();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const std::int64_t bij = m.at(i, j);
      if (bij == 0) continue;
      DiagramArrow a;
      a.from = bij > 0 ? i : j;
      a.to = bij > 0 ? j : i;
      a.weight = std::abs(checked_mul(bij, m.at(j, i)));
      a.double_arrow = (a.weight == 4 && m.symmetrizer()[i] == m.symmetrizer()[j]);
      v.arrows.push_back(a);
    }
  }
  return v;
}

// Largest diagram weight in the principal part.
inline std::int64_t max_diagram_weight(const ExchangeMatrix& m) {
  std::int64_t w = 0;
  for (int i = 0; i < m.num_mutable(); ++i)
    for (int j = i + 1; j < m.num_mutable(); ++j)
      w = std::max(w, std::abs(checked_mul(m.at(i, j), m.at(j, i))));
  return w;
}

// Connected components of the principal part (by nonzero entries).
inline std::vector<int> principal_components(const ExchangeMatrix& m) {
  const int n = m.num_mutable();
  std::vector<int> comp(n, -1);
  for (int root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    std::vector<int> stack{root};
    comp[root] = root;
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (comp[j] == -1 && m.at(i, j) != 0) {
          comp[j] = root;
          stack.push_back(j);
        }
    }
  }
  return comp;
}

}  // namespace mutfin
