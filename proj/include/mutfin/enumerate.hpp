#pragma once

// Breadth-first mutation-class enumeration with canonical deduplication,
// finiteness testing with the weight-abort rule, and type classification.

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mutfin/canonical.hpp"
#include "mutfin/matrix.hpp"
#include "mutfin/quivers.hpp"

namespace mutfin {

struct EnumCaps {
  std::size_t max_members = 1000000;
  int max_depth = 64;

  static EnumCaps from_env() {
    EnumCaps c;
    if (const char* s = std::getenv("MUTFIN_MAX_MEMBERS")) {
      char* end = nullptr;
      auto v = std::strtoull(s, &end, 10);
      if (end && *end == '\0' && v > 0) c.max_members = v;
    }
    return c;
  }
};

struct MutationClass {
  ExchangeMatrix seed;
  // canonical form -> shortest witness from the seed (BFS order)
  std::unordered_map<CanonicalForm, MutationSequence> witnesses;
  bool complete = false;

  std::size_t size() const { return witnesses.size(); }
  bool contains(const CanonicalForm& f) const { return witnesses.count(f) != 0; }
  bool contains(const ExchangeMatrix& m) const { return contains(canonical_form(m)); }
};

// Visitor returns false to abort the walk.
template <typename Visit>
inline MutationClass bfs_class(const ExchangeMatrix& seed, const EnumCaps& caps, Visit visit) {
  MutationClass cls{seed, {}, false};
  const int n = seed.num_mutable();
  std::deque<std::pair<ExchangeMatrix, MutationSequence>> frontier;

  auto admit = [&](const ExchangeMatrix& m, MutationSequence w) -> bool {
    auto f = canonical_form(m);
    if (cls.witnesses.count(f)) return true;
    if (cls.witnesses.size() >= caps.max_members) return false;  // cap: stop expanding
    cls.witnesses.emplace(std::move(f), w);
    if (!visit(m, w)) return false;
    frontier.emplace_back(m, std::move(w));
    return true;
  };

  if (!admit(seed, {})) return cls;
  bool capped = false;
  while (!frontier.empty()) {
    auto [m, w] = std::move(frontier.front());
    frontier.pop_front();
    if (static_cast<int>(w.size()) >= caps.max_depth) {
      capped = true;
      continue;
    }
    for (int k = 0; k < n; ++k) {
      auto w2 = w;
      w2.push_back(k);
      if (!admit(m.mutate(k), std::move(w2))) return cls;
    }
    if (cls.witnesses.size() >= caps.max_members) capped = true;
  }
  cls.complete = !capped;
  return cls;
}

inline MutationClass enumerate_class(const ExchangeMatrix& m, EnumCaps caps = EnumCaps::from_env()) {
  return bfs_class(m, caps, [](const ExchangeMatrix&, const MutationSequence&) { return true; });
}

struct FinitenessResult {
  bool finite = false;
  // finite: the enumerated class; infinite: witness to a heavy arrow
  std::optional<MutationClass> cls;
  MutationSequence witness;
  std::pair<int, int> heavy_arrow{-1, -1};
  std::int64_t heavy_weight = 0;
  bool capped = false;
};

// Weight-abort finiteness test on the mutable part. A diagram arrow of weight
// > 4 inside a connected component with >= 3 vertices certifies an infinite
// class; rank <= 2 components are always finite (class size <= 2).
inline FinitenessResult is_mutation_finite_mutable(const ExchangeMatrix& full,
                                                  EnumCaps caps = EnumCaps::from_env()) {
  ExchangeMatrix m = full.num_frozen() ? full.mutable_part() : full;
  const int n = m.num_mutable();
  auto comp = principal_components(m);
  std::vector<int> comp_size(n, 0);
  for (int i = 0; i < n; ++i) comp_size[comp[i]]++;

  FinitenessResult res;
  auto heavy = [&](const ExchangeMatrix& q, std::pair<int, int>& arrow, std::int64_t& wt) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        std::int64_t w = std::abs(checked_mul(q.at(i, j), q.at(j, i)));
        if (w > 4 && comp_size[comp[i]] >= 3) {
          arrow = {i, j};
          wt = w;
          return true;
        }
      }
    return false;
  };

  bool infinite = false;
  auto cls = bfs_class(m, caps, [&](const ExchangeMatrix& q, const MutationSequence& w) {
    if (heavy(q, res.heavy_arrow, res.heavy_weight)) {
      res.witness = w;
      infinite = true;
      return false;
    }
    return true;
  });
  if (infinite) {
    res.finite = false;
    return res;
  }
  res.capped = !cls.complete;
  res.finite = cls.complete;
  res.cls = std::move(cls);
  return res;
}

struct TypeLabel {
  enum Kind {
    FiniteType,
    AffineA,
    AffineD,
    AffineE,
    ExtendedAffineE,
    X6,
    X7,
    Rank2,
    SurfaceOther,
    MutationInfinite,
    Undecided,  // caps hit before the class closed
  } kind;
  int p = 0, q = 0;        // AffineA
  int n = 0;               // AffineD
  int k = 0;               // AffineE / ExtendedAffineE
  std::int64_t weight = 0; // Rank2

  bool operator==(const TypeLabel& o) const {
    return kind == o.kind && p == o.p && q == o.q && n == o.n && k == o.k && weight == o.weight;
  }

  std::string to_string() const {
    switch (kind) {
      case FiniteType: return "FiniteType";
      case AffineA: return "AffineA(" + std::to_string(p) + "," + std::to_string(q) + ")";
      case AffineD: return "AffineD(" + std::to_string(n) + ")";
      case AffineE: return "AffineE(" + std::to_string(k) + ")";
      case ExtendedAffineE: return "ExtendedAffineE(" + std::to_string(k) + ")";
      case X6: return "X6";
      case X7: return "X7";
      case Rank2: return "Rank2(" + std::to_string(weight) + ")";
      case SurfaceOther: return "SurfaceOther";
      case MutationInfinite: return "MutationInfinite";
      case Undecided: return "Undecided";
    }
    return "?";
  }
};

namespace detail {

// True when the principal part is a single non-oriented cycle; reports the
// numbers of arrows in the two directions (max first).
inline bool cycle_shape(const ExchangeMatrix& m, int& p, int& q) {
  const int n = m.num_mutable();
  if (n < 3) return false;
  std::vector<std::vector<int>> nb(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && m.at(i, j) != 0) {
        if (std::abs(m.at(i, j)) != 1) return false;
        nb[i].push_back(j);
      }
  for (int i = 0; i < n; ++i)
    if (nb[i].size() != 2) return false;
  // walk the cycle
  int fwd = 0, bwd = 0, prev = 0, cur = nb[0][0], steps = 1;
  if (m.at(0, cur) > 0) ++fwd; else ++bwd;
  while (cur != 0) {
    int nxt = (nb[cur][0] == prev) ? nb[cur][1] : nb[cur][0];
    if (m.at(cur, nxt) > 0) ++fwd; else ++bwd;
    prev = cur;
    cur = nxt;
    if (++steps > n) return false;
  }
  if (steps != n) return false;  // disconnected
  if (fwd == 0 || bwd == 0) return false;  // oriented cycle: finite type D
  p = std::max(fwd, bwd);
  q = std::min(fwd, bwd);
  return true;
}

}  // namespace detail

inline TypeLabel classify(const ExchangeMatrix& full, EnumCaps caps = EnumCaps::from_env()) {
  ExchangeMatrix m = full.num_frozen() ? full.mutable_part() : full;
  const int n = m.num_mutable();

  if (n == 2) return {TypeLabel::Rank2, 0, 0, 0, 0, max_diagram_weight(m)};
  auto fin = is_mutation_finite_mutable(m, caps);
  if (!fin.finite) {
    if (fin.capped) return {TypeLabel::Undecided};
    return {TypeLabel::MutationInfinite};
  }
  if (n == 1) return {TypeLabel::FiniteType};
  const MutationClass& cls = *fin.cls;

  // finite type: every member of the class has all weights <= 3
  bool skew_symmetric = true;
  for (auto v : m.symmetrizer())
    if (v != m.symmetrizer()[0]) skew_symmetric = false;
  {
    bool all_small = true;
    auto probe = bfs_class(m, caps, [&](const ExchangeMatrix& q, const MutationSequence&) {
      if (max_diagram_weight(q) > 3) {
        all_small = false;
        return false;
      }
      return true;
    });
    if (all_small && probe.complete) return {TypeLabel::FiniteType};
  }

  if (skew_symmetric) {
    // exceptional seeds
    if (n == 6 && cls.contains(quivers::x6())) return {TypeLabel::X6};
    if (n == 7 && cls.contains(quivers::x7())) return {TypeLabel::X7};
    for (int k = 6; k <= 8; ++k) {
      if (n == k + 1 && cls.contains(quivers::affine_e_tree(k)))
        return {TypeLabel::AffineE, 0, 0, 0, k};
      if (n == k + 2) {
        ExchangeMatrix rep = (k == 6) ? quivers::e6_11() : (k == 7) ? quivers::e7_11() : quivers::e8_11();
        if (cls.contains(rep)) return {TypeLabel::ExtendedAffineE, 0, 0, 0, k};
      }
    }
    // structural affine A: some member is a non-oriented cycle
    for (const auto& [form, wit] : cls.witnesses) {
      auto member = m.apply(wit);
      int p, q;
      if (detail::cycle_shape(member, p, q)) return {TypeLabel::AffineA, p, q};
    }
    if (n >= 5 && cls.contains(quivers::affine_d_tree(n - 1)))
      return {TypeLabel::AffineD, 0, 0, n - 1};
  }
  return {TypeLabel::SurfaceOther};
}

// Memoized classify keyed on the canonical form of the mutable part. The
// label is a class invariant, so one entry serves the whole mutation class.
inline TypeLabel classify_cached(const ExchangeMatrix& full,
                                 EnumCaps caps = EnumCaps::from_env()) {
  ExchangeMatrix m = full.num_frozen() ? full.mutable_part() : full;
  thread_local std::unordered_map<CanonicalForm, TypeLabel> cache;
  auto key = canonical_form(m);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto label = classify(m, caps);
  if (label.kind != TypeLabel::Undecided) cache.emplace(std::move(key), label);
  return label;
}

}  // namespace mutfin
