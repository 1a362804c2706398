#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mutfin/canonical.hpp"
#include "mutfin/matrix.hpp"
#include "mutfin/quivers.hpp"
#include "util.hpp"

using namespace mutfin;

TEST_CASE("construction and symmetrizer search") {
  auto a = ExchangeMatrix::create({{0, 2}, {-2, 0}}, 2);
  CHECK(a.symmetrizer() == std::vector<std::int64_t>{1, 1});

  auto b = ExchangeMatrix::create({{0, 1}, {-4, 0}}, 2);
  CHECK(b.symmetrizer() == std::vector<std::int64_t>{1, 4});

  CHECK_THROWS_AS(ExchangeMatrix::create({{0, 1}, {1, 0}}, 2), Error);
  try {
    ExchangeMatrix::create({{0, 1}, {1, 0}}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSkewSymmetrizable);
  }
  CHECK_THROWS_AS(ExchangeMatrix::create({{1, 0}, {0, 0}}, 2), Error);
}

TEST_CASE("mutation rule") {
  SUBCASE("markov stays markov") {
    auto m = quivers::markov();
    for (int k = 0; k < 3; ++k) CHECK(are_isomorphic(m.mutate(k), m));
  }
  SUBCASE("frozen row transforms with the matrix") {
    auto m = ExchangeMatrix::create({{0, 3}, {-3, 0}, {1, -2}}, 2);
    auto m2 = m.mutate(0);
    CHECK(m2.entries() == std::vector<std::vector<std::int64_t>>{{0, -3}, {3, 0}, {-1, 1}});
  }
  SUBCASE("mutating a frozen row index is an error") {
    auto m = ExchangeMatrix::create({{0, 1}, {-1, 0}, {2, 2}}, 2);
    CHECK_THROWS_AS(m.mutate(2), Error);
  }
}

TEST_CASE("sequences") {
  auto q = quivers::e6_11();
  SUBCASE("pinned sequence reaches the opposite quiver") {
    CHECK(q.apply(quivers::e6_11_sequence()) == q.opposite());
  }
  SUBCASE("empty sequence is the identity") { CHECK(q.apply({}) == q); }
  SUBCASE("a sequence followed by its reverse is the identity") {
    MutationSequence s{0, 3, 5, 1, 1, 6};
    MutationSequence r(s.rbegin(), s.rend());
    auto t = s;
    t.insert(t.end(), r.begin(), r.end());
    CHECK(q.apply(t) == q);
  }
}

TEST_CASE("coefficient rows") {
  auto m = ExchangeMatrix::create({{0, 2}, {-2, 0}}, 2);
  auto e = m.with_coefficients({-1, 1});
  CHECK(e.entries() == std::vector<std::vector<std::int64_t>>{{0, 2}, {-2, 0}, {1, -1}});
  CHECK(e.coefficients(0) == CoefficientVector{-1, 1});

  auto w = ExchangeMatrix::create({{0, 1}, {-4, 0}}, 2).with_coefficients({3, -5});
  CHECK(w.at(2, 0) == -3);
  CHECK(w.at(2, 1) == 5);

  auto z = m.with_coefficients({0, 0});
  CHECK(z.at(2, 0) == 0);
  CHECK_THROWS_AS(m.with_coefficients({1}), Error);
}

TEST_CASE("opposite") {
  auto m = ExchangeMatrix::create({{0, 1}, {-1, 0}}, 2);
  CHECK(m.opposite().at(0, 1) == -1);
  CHECK(m.opposite().opposite() == m);
}

TEST_CASE("restriction") {
  auto path = quivers::a_path(3);
  auto r = path.restrict({0, 1});
  CHECK(r.num_mutable() == 2);
  CHECK(r.at(0, 1) == 1);

  auto dbl = ExchangeMatrix::create({{0, 2}, {-2, 0}}, 2).with_coefficients({1, -1});
  auto sub = dbl.restrict({0, 1}, true);
  CHECK(sub.entries() == std::vector<std::vector<std::int64_t>>{{0, 2}, {-2, 0}, {-1, 1}});

  CHECK_THROWS_AS(path.restrict({}), Error);
}

TEST_CASE("diagram view") {
  auto a = diagram_view(ExchangeMatrix::create({{0, 1}, {-4, 0}}, 2));
  REQUIRE(a.arrows.size() == 1);
  CHECK(a.arrows[0].from == 0);
  CHECK(a.arrows[0].weight == 4);
  CHECK_FALSE(a.arrows[0].double_arrow);

  auto b = diagram_view(ExchangeMatrix::create({{0, 2}, {-2, 0}}, 2));
  CHECK(b.arrows[0].double_arrow);

  auto z = diagram_view(ExchangeMatrix::create({{0, 0}, {0, 0}}, 2));
  CHECK(z.arrows.empty());
}

TEST_CASE("randomized algebra") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    auto m = testutil::random_matrix(rng, 8, t % 2);
    const int n = m.num_mutable();
    std::uniform_int_distribution<int> kk(0, n - 1);
    const int k = kk(rng);

    CHECK(m.mutate(k).mutate(k) == m);
    CHECK(m.mutate(k).symmetrizer() == m.symmetrizer());
    CHECK(m.opposite().mutate(k) == m.mutate(k).opposite());

    auto perm = testutil::random_permutation(rng, n);
    // vertex i of m.permuted(perm) is vertex perm[i] of m
    int kp = 0;
    while (perm[kp] != k) ++kp;
    CHECK(m.permuted(perm).mutate(kp) == m.mutate(k).permuted(perm));

    // restriction commutes with mutation inside the kept set
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
      if (i == k || rng() % 2) keep.push_back(i);
    int kr = 0;
    for (int i : keep) {
      if (i == k) break;
      ++kr;
    }
    CHECK(m.mutate(k).restrict(keep, true) == m.restrict(keep, true).mutate(kr));
  }
}

TEST_CASE("overflow is detected") {
  const std::int64_t big = std::int64_t{1} << 62;
  auto m = ExchangeMatrix::create({{0, 2}, {-2, 0}, {big, -big}}, 2);
  CHECK_THROWS_AS(m.mutate(0).mutate(1).mutate(0).mutate(1), Error);
}
