#pragma once

// Triangulated surfaces with marked points: quivers from triangulations,
// the standard triangulation of a surface with boundary, and its closed-form
// admissibility predicate.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mutfin/admissible.hpp"
#include "mutfin/matrix.hpp"

namespace mutfin {

// Sides are numbered 0..num_arcs-1 (internal arcs, these index the quiver)
// followed by num_arcs..num_arcs+num_boundary-1 (boundary segments). Each
// triangle lists its three sides in cyclic order; all triangles follow one
// global orientation, `flip` reverses it.
struct Triangulation {
  int num_arcs = 0;
  int num_boundary = 0;
  std::vector<std::array<int, 3>> triangles;
  bool flip = false;
  std::vector<std::string> labels;  // optional, size num_arcs + num_boundary

  bool is_internal(int side) const { return side >= 0 && side < num_arcs; }
};

// Adjacency count: every internal arc bounds exactly two triangles, every
// boundary segment exactly one. A repeated side within one triangle would be
// a self-folded triangle; those are rejected.
inline ExchangeMatrix quiver_from_triangulation(const Triangulation& t) {
  const int n = t.num_arcs;
  const int total = n + t.num_boundary;
  std::vector<int> uses(total, 0);
  for (const auto& tri : t.triangles) {
    for (int s : tri)
      if (s < 0 || s >= total) throw Error(Errc::DimensionMismatch, "triangle side out of range");
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[0] == tri[2])
      throw Error(Errc::SelfFoldedTriangle, "triangle with a repeated side");
    for (int s : tri) uses[s]++;
  }
  for (int s = 0; s < total; ++s) {
    const int want = t.is_internal(s) ? 2 : 1;
    if (uses[s] != want)
      throw Error(Errc::DimensionMismatch,
                  "side " + std::to_string(s) + " lies in " + std::to_string(uses[s]) +
                      " triangles, expected " + std::to_string(want));
  }
  std::vector<std::vector<std::int64_t>> e(n, std::vector<std::int64_t>(n, 0));
  for (const auto& tri : t.triangles)
    for (int k = 0; k < 3; ++k) {
      const int i = tri[k], j = tri[(k + 1) % 3];
      if (t.is_internal(i) && t.is_internal(j)) {
        e[i][j] += 1;
        e[j][i] -= 1;
      }
    }
  if (t.flip)
    for (auto& row : e)
      for (auto& v : row) v = -v;
  return ExchangeMatrix::create(std::move(e), n);
}

// Genus, marked point counts per boundary component (first entry is the
// outer component carrying the base point), and punctures.
struct SurfaceSpec {
  int genus = 0;
  std::vector<int> boundary;
  int punctures = 0;
};

// Vertex bookkeeping for the standard quiver: I (forced-zero set), I_in
// (arcs meeting an inner boundary component), I_out (outer polygon arcs),
// and the distinguished pair v1, v2 next to the outer boundary. The optional
// d annotates vertex weights for the weighted variant of the predicate.
struct StandardMeta {
  ExchangeMatrix matrix;
  std::vector<int> I, I_in, I_out;
  int v1 = -1, v2 = -1;
  std::optional<std::vector<std::int64_t>> d;
};

// Standard triangulation: features (holes, then handles, then punctures)
// chained left to right inside nested loops based at the outer marked point.
// The leftmost feature sits in a monogon (two punctures share it when there
// are no holes and handles); every later feature sits in a digon between
// consecutive loops; the outermost region is a fan-triangulated polygon when
// the outer component has more than one marked point.
inline std::pair<Triangulation, StandardMeta> standard_triangulation(const SurfaceSpec& spec) {
  if (spec.boundary.empty()) throw Error(Errc::NoBoundary, "surface has no boundary component");
  for (int c : spec.boundary)
    if (c < 1) throw Error(Errc::DimensionMismatch, "boundary component without marked points");
  if (spec.genus < 0 || spec.punctures < 0)
    throw Error(Errc::DimensionMismatch, "negative genus or puncture count");
  const int holes = static_cast<int>(spec.boundary.size()) - 1;
  if (spec.genus == 0 && holes == 0 && spec.punctures <= 2)
    throw Error(Errc::ExcludedSmallCase, "disk with at most two punctures");
  if (spec.genus == 0 && holes == 1 && spec.punctures == 0)
    throw Error(Errc::ExcludedSmallCase, "unpunctured annulus");

  Triangulation t;
  std::vector<std::string> arc_labels, bd_labels;
  auto arc = [&](std::string name) {
    arc_labels.push_back(std::move(name));
    return static_cast<int>(arc_labels.size()) - 1;
  };
  // boundary ids are provisional (negative); renumbered after all arcs exist
  auto bd = [&](std::string name) {
    bd_labels.push_back(std::move(name));
    return -static_cast<int>(bd_labels.size());
  };
  auto tri = [&](int a, int b, int c) { t.triangles.push_back({a, b, c}); };

  StandardMeta meta{ExchangeMatrix::create({{0}}, 1), {}, {}, {}, -1, -1, std::nullopt};

  // feature list: holes first, then handles, then punctures
  enum class Kind { Hole, Handle, Puncture };
  std::vector<std::pair<Kind, int>> features;
  for (int h = 0; h < holes; ++h) features.emplace_back(Kind::Hole, spec.boundary[h + 1]);
  for (int g = 0; g < spec.genus; ++g) features.emplace_back(Kind::Handle, 0);
  for (int q = 0; q < spec.punctures; ++q) features.emplace_back(Kind::Puncture, 0);

  const bool shared_monogon = (holes == 0 && spec.genus == 0);
  const int regions = static_cast<int>(features.size()) - (shared_monogon ? 1 : 0);

  const int k = spec.boundary[0];
  // closing side of the outermost region: a loop separating the outer
  // polygon when k >= 2, the single outer boundary segment otherwise
  const int gamma0 = (k >= 2) ? arc("g0") : bd("t1");

  // interior of one hole: fan u_1..u_s around the inner component, second
  // arc w closing the circuit, all inside the enclosing loop
  auto hole_interior = [&](int enclosing, int s, int idx) {
    std::vector<int> u(s);
    for (int i = 0; i < s; ++i) {
      u[i] = arc("u" + std::to_string(idx) + "_" + std::to_string(i + 1));
      meta.I_in.push_back(u[i]);
    }
    const int w = arc("w" + std::to_string(idx));
    meta.I_in.push_back(w);
    std::vector<int> seg(s);
    for (int i = 0; i < s; ++i) seg[i] = bd("s" + std::to_string(idx) + "_" + std::to_string(i + 1));
    for (int i = 0; i + 1 < s; ++i) tri(u[i], seg[i], u[i + 1]);
    tri(u[s - 1], seg[s - 1], w);
    tri(enclosing, w, u[0]);
  };

  // interior of one handle: pentagon with doubled sides al, be, diagonals
  // ga, de, closed by the enclosing side; returns {de, be} (the two sides of
  // the closing triangle)
  auto handle_interior = [&](int enclosing, int idx) {
    const std::string sfx = std::to_string(idx);
    const int al = arc("al" + sfx), be = arc("be" + sfx), ga = arc("ga" + sfx),
              de = arc("de" + sfx);
    tri(al, be, ga);
    tri(ga, al, de);
    tri(de, be, enclosing);
    return std::pair<int, int>{de, be};
  };

  int region_index = 0;
  int prev = -1;  // loop bounding the previous region
  std::pair<int, int> vpair{-1, -1};

  auto next_outer = [&]() {
    ++region_index;
    return (region_index == regions) ? gamma0
                                     : arc("l" + std::to_string(region_index));
  };

  // innermost region
  {
    const int enclosing = next_outer();
    if (shared_monogon) {
      // two punctures in one monogon: digon around the first puncture plus
      // the closing triangle
      const int a = arc("a"), m = arc("m"), b = arc("b"), c = arc("c");
      tri(a, m, b);
      tri(c, m, a);
      tri(enclosing, b, c);
      if (regions == 1) vpair = {b, c};  // unreachable: disk needs >= 3 punctures
    } else if (features[0].first == Kind::Hole) {
      hole_interior(enclosing, features[0].second, 1);
      if (regions == 1) vpair = {-1, -1};  // unreachable: annulus is excluded
    } else {
      vpair = handle_interior(enclosing, 1);  // used only when regions == 1
    }
    prev = enclosing;
  }

  // one digon per remaining feature
  for (int f = (shared_monogon ? 2 : 1); f < static_cast<int>(features.size()); ++f) {
    const int out = next_outer();
    const auto [kind, count] = features[f];
    const int idx = f + 1;
    if (kind == Kind::Puncture) {
      const int e = arc("e" + std::to_string(idx)), fa = arc("f" + std::to_string(idx));
      tri(prev, e, fa);
      tri(out, fa, e);
      vpair = {fa, e};
    } else if (kind == Kind::Hole) {
      const int x = arc("x" + std::to_string(idx));
      hole_interior(x, count, idx);
      tri(out, prev, x);
      vpair = {prev, x};
    } else {
      const int y = arc("y" + std::to_string(idx));
      handle_interior(y, idx);
      tri(out, prev, y);
      vpair = {prev, y};
    }
    prev = out;
  }

  // outer polygon: fan from the base point over the remaining boundary
  // segments, closed by gamma0
  if (k >= 2) {
    std::vector<int> seg(k);
    for (int i = 0; i < k; ++i) seg[i] = bd("t" + std::to_string(i + 1));
    if (k == 2) {
      tri(seg[0], seg[1], gamma0);
    } else {
      std::vector<int> diag(k + 1, -1);
      for (int j = 3; j <= k; ++j) {
        diag[j] = arc("d" + std::to_string(j));
        meta.I_out.push_back(diag[j]);
      }
      tri(seg[0], seg[1], diag[3]);
      for (int j = 3; j < k; ++j) tri(diag[j], seg[j - 1], diag[j + 1]);
      tri(diag[k], seg[k - 1], gamma0);
    }
    meta.I_out.push_back(gamma0);
  }

  meta.v1 = vpair.first;
  meta.v2 = vpair.second;

  // assemble the triangulation: arcs keep their ids, boundary ids follow
  t.num_arcs = static_cast<int>(arc_labels.size());
  t.num_boundary = static_cast<int>(bd_labels.size());
  for (auto& tr : t.triangles)
    for (int& s : tr)
      if (s < 0) s = t.num_arcs + (-s - 1);
  t.labels = arc_labels;
  t.labels.insert(t.labels.end(), bd_labels.begin(), bd_labels.end());

  meta.matrix = quiver_from_triangulation(t);

  std::vector<bool> special(t.num_arcs, false);
  for (int i : meta.I_in) special[i] = true;
  for (int i : meta.I_out) special[i] = true;
  special[meta.v1] = special[meta.v2] = true;
  for (int i = 0; i < t.num_arcs; ++i)
    if (!special[i]) meta.I.push_back(i);

  return {std::move(t), std::move(meta)};
}

// Closed-form admissibility for the standard quiver: b vanishes on I, the
// annulus property holds on every weight-4 arrow, and the distinguished pair
// satisfies b_{v1} = -b_{v2} <= 0 (or b_{v1} = -2 b_{v2} <= 0 when the
// annotated weights have d_{v1} < d_{v2}).
inline bool standard_admissible(const StandardMeta& meta, const CoefficientVector& b) {
  const int n = meta.matrix.num_mutable();
  if (static_cast<int>(b.size()) != n)
    throw Error(Errc::IndexMismatch, "coefficient vector has size " + std::to_string(b.size()) +
                                         ", quiver has " + std::to_string(n) + " vertices");
  for (int i : meta.I)
    if (b[i] != 0) return false;
  if (!annulus_violations(meta.matrix.with_coefficients(b)).empty()) return false;
  std::int64_t d1 = 1, d2 = 1;
  if (meta.d) {
    d1 = (*meta.d)[meta.v1];
    d2 = (*meta.d)[meta.v2];
  }
  const std::int64_t b1 = b[meta.v1], b2 = b[meta.v2];
  if (d1 >= d2) return b1 == -b2 && b1 <= 0;
  return b1 == -2 * b2 && b1 <= 0;
}

// Annulus with p and q boundary marked points: two parallel bridging arcs
// (ids 0 and 1) bounding a sub-annulus with one marked point per side, and
// nested peripheral arcs around the remaining points of each component. The
// quiver is the double-arrow representative of the (p,q) affine class: a
// double arrow 1 => 0 with one chain of p-1 and one chain of q-1 vertices
// attached to the pair.
inline Triangulation annulus_triangulation(int p, int q) {
  if (p < 1 || q < 1)
    throw Error(Errc::DimensionMismatch, "annulus needs marked points on both components");
  Triangulation t;
  t.num_arcs = p + q;
  t.num_boundary = p + q;
  t.labels.assign(p + q, "");
  t.labels[0] = "c1";
  t.labels[1] = "c2";
  auto m = [&](int i) { return 2 + (i - 1); };      // m_1..m_{p-1}
  auto nn = [&](int i) { return p + 1 + (i - 1); }; // n_1..n_{q-1}
  for (int i = 1; i < p; ++i) t.labels[m(i)] = "m" + std::to_string(i);
  for (int i = 1; i < q; ++i) t.labels[nn(i)] = "n" + std::to_string(i);
  const int base = p + q;
  for (int i = 0; i < p; ++i) t.labels.push_back("sp" + std::to_string(i + 1));
  for (int i = 0; i < q; ++i) t.labels.push_back("sq" + std::to_string(i + 1));
  auto seg_p = [&](int i) { return base + i; };
  auto seg_q = [&](int i) { return base + p + i; };
  // one side: peripheral arcs m_1 (around one point) up to m_{p-1} (around
  // all of them), then the triangle closed by the bridging pair
  if (p == 1) {
    t.triangles.push_back({seg_p(0), 1, 0});
  } else {
    t.triangles.push_back({seg_p(0), seg_p(1), m(1)});
    for (int j = 1; j + 1 < p; ++j) t.triangles.push_back({m(j), seg_p(j + 1), m(j + 1)});
    t.triangles.push_back({m(p - 1), 1, 0});
  }
  // other side, mirrored
  if (q == 1) {
    t.triangles.push_back({0, seg_q(0), 1});
  } else {
    t.triangles.push_back({seg_q(0), seg_q(1), nn(1)});
    for (int j = 1; j + 1 < q; ++j) t.triangles.push_back({nn(j), seg_q(j + 1), nn(j + 1)});
    t.triangles.push_back({0, nn(q - 1), 1});
  }
  return t;
}

// Fixed table of bridging curves on the annulus with one marked point per
// boundary component, with their coefficient pairs (b1, b2), plus the closed
// curve. Successive bridging entries differ by one twist along the core.
struct BridgingCurve {
  std::string id;
  std::int64_t b1 = 0, b2 = 0;
};

inline std::vector<BridgingCurve> s11_bridging_table() {
  return {
      {"twist-3", -2, 3}, {"twist-2", -1, 2}, {"twist-1", 0, 1},  {"twist0", 1, 0},
      {"twist1", 0, -1},  {"twist2", -1, 0},  {"twist3", -2, 1},  {"closed", -1, 1},
  };
}

}  // namespace mutfin
