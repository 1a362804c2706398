#pragma once

// Named quiver representatives used as classification seeds and test
// fixtures, together with the composite mutation sequences that carry each
// extended-affine or X-type representative to its opposite quiver.
// All indices are 0-based.

#include <vector>

#include "mutfin/matrix.hpp"

namespace mutfin {
namespace quivers {

class Builder {
 public:
  explicit Builder(int n) : n_(n), e_(n, std::vector<std::int64_t>(n, 0)) {}
  // w arrows from a to b
  Builder& arrow(int a, int b, std::int64_t w = 1) {
    e_[a][b] = w;
    e_[b][a] = -w;
    return *this;
  }
  // asymmetric pair b_ab = p, b_ba = -q (weighted diagram edge)
  Builder& pair(int a, int b, std::int64_t p, std::int64_t q) {
    e_[a][b] = p;
    e_[b][a] = -q;
    return *this;
  }
  ExchangeMatrix build(std::optional<std::vector<std::int64_t>> d = std::nullopt) const {
    return ExchangeMatrix::create(e_, n_, std::move(d));
  }

 private:
  int n_;
  std::vector<std::vector<std::int64_t>> e_;
};

// Double arrow core with an oriented triangle through each attachment a:
// core_hi => core_lo doubled, core_lo -> a -> core_hi.
inline void core_with_triangles(Builder& b, int core_hi, int core_lo, const std::vector<int>& attach) {
  b.arrow(core_hi, core_lo, 2);
  for (int a : attach) {
    b.arrow(core_lo, a);
    b.arrow(a, core_hi);
  }
}

// Vertices 0..7. Double 7=>6; oriented triangles 6 -> i -> 7 for i in {0,1,2};
// pendants 3->0, 4->1, 5->2. Sequence (0,1,2, 3,4,5,6, 0,1,2) yields the
// opposite quiver.
inline ExchangeMatrix e6_11() {
  Builder b(8);
  core_with_triangles(b, 7, 6, {0, 1, 2});
  b.arrow(3, 0).arrow(4, 1).arrow(5, 2);
  return b.build();
}
inline MutationSequence e6_11_sequence() { return {0, 1, 2, 3, 4, 5, 6, 0, 1, 2}; }

// Vertices 0..8. Double 8=>7; triangles 7 -> i -> 8 for i in {1,2,3};
// wing chains 0<-5->1 and 4<-6->3 (chain centers are sources). Sequence
// mu* diamond mu* diamond mu* with mu* = (0,1,2,3,4), diamond = (5,6,7)
// carries this quiver to its exact opposite.
inline ExchangeMatrix e7_11() {
  Builder b(9);
  core_with_triangles(b, 8, 7, {1, 2, 3});
  b.arrow(5, 0).arrow(5, 1);
  b.arrow(6, 4).arrow(6, 3);
  return b.build();
}
inline MutationSequence e7_11_sequence() {
  MutationSequence s;
  const MutationSequence star{0, 1, 2, 3, 4}, dia{5, 6, 7};
  for (int rep = 0; rep < 5; ++rep) {
    const auto& blk = (rep % 2 == 0) ? star : dia;
    s.insert(s.end(), blk.begin(), blk.end());
  }
  return s;
}

// Vertices 0..9. Double 9=>8; triangles 8 -> i -> 9 for i in {1,2,3};
// pendant 0->1; chain 3<-4->5<-6->7 (alternating sources). Sequence
// (mu* diamond)^4 mu* with mu* = (1,2,3,5,7), diamond = (0,4,6,8) carries
// this quiver to its exact opposite.
inline ExchangeMatrix e8_11() {
  Builder b(10);
  core_with_triangles(b, 9, 8, {1, 2, 3});
  b.arrow(0, 1);
  b.arrow(4, 3).arrow(4, 5).arrow(6, 5).arrow(6, 7);
  return b.build();
}
inline MutationSequence e8_11_sequence() {
  MutationSequence s;
  const MutationSequence star{1, 2, 3, 5, 7}, dia{0, 4, 6, 8};
  for (int rep = 0; rep < 9; ++rep) {
    const auto& blk = (rep % 2 == 0) ? star : dia;
    s.insert(s.end(), blk.begin(), blk.end());
  }
  return s;
}

// Vertices 0..6: center 0 and three blades. Blade (a,b): oriented triangle
// 0 -> a, a => b doubled, b -> 0. Double arrows sit at (1,2), (3,4), (5,6).
inline ExchangeMatrix x7() {
  Builder b(7);
  for (int blade = 0; blade < 3; ++blade) {
    int u = 1 + 2 * blade, v = 2 + 2 * blade;
    b.arrow(0, u).arrow(u, v, 2).arrow(v, 0);
  }
  return b.build();
}

// Vertices 0..5: two blades of x7 plus the leaf 5 with a single arrow 0 -> 5.
inline ExchangeMatrix x6() {
  Builder b(6);
  for (int blade = 0; blade < 2; ++blade) {
    int u = 1 + 2 * blade, v = 2 + 2 * blade;
    b.arrow(0, u).arrow(u, v, 2).arrow(v, 0);
  }
  b.arrow(0, 5);
  return b.build();
}

// Affine D representative, vertices 0..n (n >= 4): double 0=>1 with oriented
// triangles through 2, n and 3, then the chain 3-4-...-(n-1).
inline ExchangeMatrix affine_d(int n) {
  Builder b(n + 1);
  core_with_triangles(b, 0, 1, {2, n, 3});
  for (int i = 3; i + 1 <= n - 1; ++i) b.arrow(i + 1, i);
  return b.build();
}

// Affine E_k representative (k in {6,7,8}), vertices 0..k: double 0=>1 with
// triangles through 2, 3, 5; wing chains 4->3 and (k)->...->6->5.
inline ExchangeMatrix affine_e(int k) {
  Builder b(k + 1);
  core_with_triangles(b, 0, 1, {2, 3, 5});
  b.arrow(4, 3);
  for (int i = 5; i + 1 <= k; ++i) b.arrow(i + 1, i);
  return b.build();
}

// Tree orientation of the affine D_n Dynkin diagram (n+1 vertices): central
// chain 2-...-(n-2) plus forks {0,1} and {n-1,n} at the two ends.
inline ExchangeMatrix affine_d_tree(int n) {
  Builder b(n + 1);
  b.arrow(0, 2).arrow(1, 2);
  for (int i = 2; i + 1 <= n - 2; ++i) b.arrow(i, i + 1);
  b.arrow(n - 2, n - 1).arrow(n - 2, n);
  return b.build();
}

// Tree orientation of the affine E_k Dynkin diagram (k+1 vertices): center 0
// with arms of lengths (2,2,2) for k=6, (3,3,1) for k=7, (5,2,1) for k=8,
// all edges oriented away from the center.
inline ExchangeMatrix affine_e_tree(int k) {
  std::vector<int> arms;
  if (k == 6) arms = {2, 2, 2};
  else if (k == 7) arms = {3, 3, 1};
  else arms = {5, 2, 1};
  Builder b(k + 1);
  int next = 1;
  for (int len : arms) {
    int prev = 0;
    for (int step = 0; step < len; ++step) {
      b.arrow(prev, next);
      prev = next++;
    }
  }
  return b.build();
}

// Affine A_{p,q} representative (p, q >= 1): cycle on p+q vertices with the
// first p edges oriented forward and the remaining q backward. For p=q=1 this
// degenerates to the double arrow.
inline ExchangeMatrix affine_a(int p, int q) {
  const int n = p + q;
  if (n == 2) {
    Builder b(2);
    b.arrow(0, 1, 2);
    return b.build();
  }
  Builder b(n);
  for (int i = 0; i < n; ++i) {
    int j = (i + 1) % n;
    if (i < p) b.arrow(i, j);
    else b.arrow(j, i);
  }
  return b.build();
}

// Linear A_n path 0 -> 1 -> ... -> n-1.
inline ExchangeMatrix a_path(int n) {
  Builder b(n);
  for (int i = 0; i + 1 < n; ++i) b.arrow(i, i + 1);
  return b.build();
}

// Markov quiver: oriented triangle of double arrows.
inline ExchangeMatrix markov() {
  Builder b(3);
  b.arrow(0, 1, 2).arrow(1, 2, 2).arrow(2, 0, 2);
  return b.build();
}

// Rank-2 matrix [[0,p],[-q,0]], diagram weight p*q.
inline ExchangeMatrix rank2(std::int64_t p, std::int64_t q) {
  Builder b(2);
  b.pair(0, 1, p, q);
  return b.build();
}

}  // namespace quivers
}  // namespace mutfin
