#include "qdc/koszul.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qdc;

namespace {

ClassVec vec(std::initializer_list<Rational> xs) {
  ClassVec v(Index(xs.size()));
  Index k = 0;
  for (const auto& x : xs) v[k++] = x;
  return v;
}

// Hyperbolic plane; q(h,h) = 4, q(l,h) = 1.
DivisorConfig rank_one(long N, int n) {
  RatMat g(2, 2);
  g << 0, 1, 1, 0;
  return {H2Lattice(g), {{vec({2, 1}), vec({1, 2})}}, vec({1, 0}), {vec({2, 1})}, N, n};
}

// U + <-2>; q(h1,h1) = q(h2,h2) = 4, q(l,h_i) = 1, q(h1+h2,h1+h2) = 18.
DivisorConfig rank_two(long N, int n) {
  RatMat g = RatMat::Constant(3, 3, Rational(0));
  g(0, 1) = g(1, 0) = 1;
  g(2, 2) = -2;
  return {H2Lattice(g),
          {{vec({2, 1, 0}), vec({3, 1, 1}), vec({1, 2, 0})}},
          vec({1, 0, 0}),
          {vec({2, 1, 0}), vec({3, 1, 1})},
          N,
          n};
}

}  // namespace

TEST_CASE("Koszul terms", "[koszul]") {
  DivisorConfig c0 = rank_one(5, 2);
  c0.h.clear();
  const auto t0 = koszul_terms(c0);
  REQUIRE(t0.size() == 1);
  CHECK(t0[0].cls == vec({5, 0}));
  const auto t1 = koszul_terms(rank_one(5, 2));
  REQUIRE(t1.size() == 2);
  CHECK(t1[0].cls == vec({3, -1}));
  CHECK(t1[1].cls == vec({5, 0}));
  const auto t2 = koszul_terms(rank_two(10, 3));
  REQUIRE(t2.size() == 4);
  CHECK(t2[0].subset == std::vector<int>{1, 2});
  CHECK(t2[0].cls == vec({5, -2, -1}));
}

TEST_CASE("threshold", "[koszul]") {
  const DivisorConfig c = rank_one(5, 2);
  CHECK(n0_threshold(c.lattice, c.l, c.h) == 4);
  RatMat g(2, 2);
  g << 0, 1, 1, 0;
  // q(h,h) = 2, q(l,h) = 2.
  CHECK(n0_threshold(H2Lattice(g), vec({2, 0}), {vec({1, 1})}) == 1);
  const DivisorConfig c2 = rank_two(10, 3);
  CHECK(n0_threshold(c2.lattice, c2.l, c2.h) == 9);
  CHECK_THROWS_AS(n0_threshold(c.lattice, vec({-1, 0}), c.h), std::invalid_argument);
}

TEST_CASE("configuration validation", "[koszul]") {
  DivisorConfig c = rank_one(5, 2);
  c.l = vec({1, 1});
  CHECK_THROWS_WITH(validate(c), Catch::Matchers::ContainsSubstring("q(l, l)"));
  c = rank_one(5, 2);
  c.h = {vec({1, -1})};
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = rank_one(5, 2);
  c.l = vec({0, 1});  // q(l, h) = 2 > 0 but q(l,l) = 0; fine
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("grid shape", "[koszul]") {
  for (int n : {2, 3}) {
    for (int k : {1, 2}) {
      DivisorConfig c = k == 1 ? rank_one(12, n) : rank_two(12, n);
      const SpectralGrid g = vanishing_grid(c);
      REQUIRE(g.columns.size() == std::size_t(1 << k) + 1);
      for (const auto& col : g.columns) {
        REQUIRE(col.cells.size() == std::size_t(n + 1));
        for (int row = 0; row <= n; ++row) {
          const Cell cell = col.cells[std::size_t(row)];
          if (col.restriction)
            CHECK(cell == Cell::Input);
          else if (col.subset.empty())
            CHECK(cell == Cell::PossiblyNonzero);
          else
            CHECK(cell == (row == n ? Cell::PossiblyNonzero : Cell::Zero));
        }
      }
    }
  }
  const std::string text = vanishing_grid(rank_one(5, 2)).render();
  CHECK(text.find("N l - h1") != std::string::npos);
  CHECK(text.find("H^2 |") < text.find("H^0 |"));
}

TEST_CASE("below threshold", "[koszul]") {
  CHECK_THROWS_AS(vanishing_grid(rank_one(4, 2)), BelowThreshold);
  CHECK_THROWS_AS(vanishing_grid(rank_one(3, 2)), BelowThreshold);
  CHECK_NOTHROW(vanishing_grid(rank_one(5, 2)));
  CHECK_THROWS_AS(surjectivity_verdict(rank_two(9, 3)), BelowThreshold);
}

TEST_CASE("surjectivity verdict", "[koszul]") {
  const SurjectivityReport r1 = surjectivity_verdict(rank_one(5, 2));
  CHECK(r1.verdict == Verdict::Surjective);
  REQUIRE(r1.trace.size() == 1);
  CHECK(r1.trace[0].find("case (iii)") != std::string::npos);
  // Agrees with H^1(N l - h1) = 0 read off directly.
  CHECK(r1.grid->columns[0].cells[1] == Cell::Zero);
  CHECK(surjectivity_verdict(rank_two(10, 3)).verdict == Verdict::Surjective);
  CHECK(surjectivity_verdict(rank_two(10, 2)).verdict == Verdict::NotApplicable);
  CHECK(surjectivity_verdict(rank_one(5, 1)).verdict == Verdict::NotApplicable);
  // Stable as N grows.
  for (long N : {5L, 6L, 17L, 1000L}) CHECK(surjectivity_verdict(rank_one(N, 2)).verdict == Verdict::Surjective);
  CHECK_FALSE(r1.qualifier.empty());
}
