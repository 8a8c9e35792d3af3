#include "qdc/lattice.hpp"

#include "oracles/lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qdc;

namespace {

ClassVec vec(std::initializer_list<Rational> xs) {
  ClassVec v(Index(xs.size()));
  Index k = 0;
  for (const auto& x : xs) v[k++] = x;
  return v;
}

RatMat mat(int r, std::initializer_list<Rational> xs) {
  RatMat m(r, r);
  Index k = 0;
  for (const auto& x : xs) {
    m(k / r, k % r) = x;
    ++k;
  }
  return m;
}

H2Lattice hyperbolic() { return H2Lattice(mat(2, {0, 1, 1, 0})); }

ConeSpec fixture_cone() { return {{vec({2, 1}), vec({1, 2})}}; }

}  // namespace

TEST_CASE("q evaluation", "[lattice]") {
  const H2Lattice u = hyperbolic();
  CHECK(q_eval(u, vec({1, 0}), vec({0, 1})) == 1);
  CHECK(q_eval(u, vec({2, 1}), vec({1, 2})) == 5);
  CHECK(q_eval(u, vec({Rational(1, 2), 3}), vec({1, Rational(-1, 3)})) == Rational(17, 6));
  CHECK_THROWS_AS(q_eval(u, vec({1, 0, 0}), vec({1, 0})), std::invalid_argument);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const RandomInstance ri = random_instance(rng, 4, 2);
    const ClassVec& a = ri.c1;
    const ClassVec& b = ri.cone.generators[0];
    CHECK(q_eval(ri.lattice, a, b) == q_eval(ri.lattice, b, a));
    CHECK(q_eval(ri.lattice, a, b) == oracle::q(ri.lattice.gram(), a, b));
  }
}

TEST_CASE("lattice validation", "[lattice]") {
  CHECK_THROWS_AS(H2Lattice(mat(2, {1, 2, 3, 4})), std::invalid_argument);
  CHECK_THROWS_WITH(H2Lattice(mat(2, {1, 1, 1, 1})), Catch::Matchers::ContainsSubstring("degenerate"));
  CHECK_THROWS_AS(H2Lattice(RatMat(2, 3)), std::invalid_argument);
}

TEST_CASE("signature", "[lattice]") {
  const Signature s = signature(hyperbolic());
  CHECK(s.positive == 1);
  CHECK(s.negative == 1);
  const Signature d = signature(H2Lattice(mat(3, {2, 0, 0, 0, -2, 0, 0, 0, -2})));
  CHECK(d.positive == 1);
  CHECK(d.negative == 2);
  // Direct sum U + U + <-2>.
  RatMat g = RatMat::Constant(5, 5, Rational(0));
  g(0, 1) = g(1, 0) = g(2, 3) = g(3, 2) = 1;
  g(4, 4) = -2;
  const Signature sum = signature(H2Lattice(g));
  CHECK(sum.positive == 2);
  CHECK(sum.negative == 3);
  // K3 lattice shape: 3 U + 2 E8(-1) has signature (3, 19); here 3 U + <-2>^16.
  RatMat k3 = RatMat::Constant(22, 22, Rational(0));
  for (int b = 0; b < 3; ++b) k3(2 * b, 2 * b + 1) = k3(2 * b + 1, 2 * b) = 1;
  for (int i = 6; i < 22; ++i) k3(i, i) = -2;
  const Signature s3 = signature(H2Lattice(k3));
  CHECK(s3.positive == 3);
  CHECK(s3.negative == 19);
}

TEST_CASE("Fujiki relation check", "[lattice]") {
  const H2Lattice u = hyperbolic();
  const std::vector<ClassVec> classes = {vec({1, 0}), vec({2, 1}), vec({-1, 3}), vec({Rational(1, 2), 5})};
  auto q_self = [&](const ClassVec& e) { return q_eval(u, e, e); };
  CHECK(fujiki_check(u, 1, classes, q_self).pass);
  auto squared = [&](const ClassVec& e) { return q_self(e) * q_self(e); };
  CHECK(fujiki_check(u, 2, classes, squared).pass);
  auto perturbed = [&](const ClassVec& e) {
    return e == classes[2] ? squared(e) + 1 : squared(e);
  };
  const FujikiCheck bad = fujiki_check(u, 2, classes, perturbed);
  CHECK_FALSE(bad.pass);
  CHECK(bad.flagged == std::vector<std::size_t>{2});
}

TEST_CASE("cone validation", "[lattice]") {
  const H2Lattice u = hyperbolic();
  CHECK_NOTHROW(validate_cone(u, fixture_cone()));
  CHECK_THROWS_WITH(validate_cone(u, {{vec({1, 0})}}), Catch::Matchers::ContainsSubstring("invalid cone"));
  CHECK_THROWS_AS(validate_cone(u, {{vec({2, 1}), vec({-1, -2})}}), std::invalid_argument);
  CHECK_THROWS_AS(validate_cone(u, {}), std::invalid_argument);
}

TEST_CASE("classification fixtures", "[lattice]") {
  const H2Lattice u = hyperbolic();
  const ConeSpec c = fixture_cone();
  const VanishingReport r1 = classify(u, c, vec({1, 0}), 2);
  CHECK(r1.which == VanishingCase::DualClosure);
  CHECK(r1.pairings == std::vector<Rational>{1, 2});
  CHECK(r1.zero_set() == std::vector<int>{3, 4});
  const VanishingReport r2 = classify(u, c, vec({-1, 0}), 2);
  CHECK(r2.which == VanishingCase::MinusDualClosure);
  CHECK(r2.zero_set() == std::vector<int>{0, 1});
  const VanishingReport r3 = classify(u, c, vec({1, -1}), 2);
  CHECK(r3.which == VanishingCase::Neither);
  CHECK(r3.pairings == std::vector<Rational>{-1, 1});
  CHECK(r3.zero_set() == std::vector<int>{0, 1, 3, 4});
  CHECK(r3.description() == "case (iii): H^i = 0 for all i != n");
  CHECK_THROWS_AS(classify(u, c, vec({0, 0}), 2), HypothesisError);
  // Boundary class: one zero pairing, no negative ones.
  const ConeSpec one{{vec({1, 1})}};
  CHECK(classify(u, {{vec({1, 1}), vec({1, 2})}}, vec({2, -1}), 1).which == VanishingCase::DualClosure);
  CHECK_THROWS_WITH(classify(u, one, vec({1, -1}), 1), Catch::Matchers::ContainsSubstring("full-dimensional"));
}

TEST_CASE("primitive witness fixtures", "[lattice]") {
  const H2Lattice u = hyperbolic();
  const ConeSpec c = fixture_cone();
  const auto w = primitive_witness(u, c, vec({1, -1}));
  REQUIRE(w);
  CHECK(*w == vec({Rational(3, 2), Rational(3, 2)}));
  CHECK(q_eval(u, vec({1, -1}), *w) == 0);
  CHECK_FALSE(primitive_witness(u, c, vec({1, 0})));
  CHECK_FALSE(primitive_witness(u, c, c.generators[0]));
  CHECK_THROWS_AS(primitive_witness(u, c, vec({0, 0})), std::invalid_argument);
}

TEST_CASE("nef perturbation fixture", "[lattice]") {
  // q(eta,omega) = 2, q(omega,omega) = 2 with eta = (1,0), omega = (1,1).
  const H2Lattice u = hyperbolic();
  const ClassVec eta = vec({2, 0}), omega = vec({1, 1});
  REQUIRE(q_eval(u, eta, omega) == 2);
  REQUIRE(q_eval(u, omega, omega) == 2);
  const NefPerturbation np = nef_perturbation(u, eta, omega, Rational(1, 2));
  CHECK(np.lambda == 1);
  CHECK(np.delta == Rational(1, 8));
  CHECK(np.q_kahler_shifted == Rational(-7, 8));
  CHECK(classify(u, np.witness_cone, np.shifted, 1).which == VanishingCase::Neither);
  CHECK_THROWS_WITH(nef_perturbation(u, eta, omega, Rational(1)), Catch::Matchers::ContainsSubstring("eps"));
  CHECK_THROWS_WITH(nef_perturbation(u, vec({1, 1}), omega, Rational(1, 4)),
                    Catch::Matchers::ContainsSubstring("q(eta, eta)"));
  CHECK_THROWS_AS(nef_perturbation(u, vec({-2, 0}), omega, Rational(1, 4)), std::invalid_argument);
}

TEST_CASE("Beauville form evaluator", "[lattice]") {
  CHECK(beauville_coefficient(1) == 0);
  CHECK(beauville_coefficient(2) == Rational(2, 9));
  CHECK(beauville_coefficient(3) == Rational(4, 25));
  // n = 1: the correction term vanishes whatever the data.
  CHECK(beauville_form({1, Rational(5), Rational(3), Rational(7), Rational(11)}) == 5);
  CHECK(beauville_form({2, Rational(5), Rational(3), Rational(6), Rational(4)}) == 5 - Rational(2, 9) * 18 / 4);
  CHECK_THROWS_AS(beauville_form({2, Rational(1), Rational(1), Rational(1), Rational(0)}), std::invalid_argument);
}

TEST_CASE("random classification: totality, mirror symmetry, witnesses", "[lattice][random]") {
  std::mt19937_64 rng(20261016);
  int counts[3] = {0, 0, 0};
  int degenerate = 0;
  for (int t = 0; t < 1000; ++t) {
    const int rank = 2 + t % 5;
    const RandomInstance ri = random_instance(rng, rank, 1 + t % 4);
    const int expect = oracle::sign_case(ri.lattice.gram(), ri.cone.generators, ri.c1);
    if (expect < 0) {
      CHECK_THROWS_AS(classify(ri.lattice, ri.cone, ri.c1, 2), std::invalid_argument);
      ++degenerate;
      continue;
    }
    const VanishingReport r = classify(ri.lattice, ri.cone, ri.c1, 2);
    CHECK(int(r.which) == expect);
    ++counts[expect];
    const VanishingReport m = classify(ri.lattice, ri.cone, ClassVec(-ri.c1), 2);
    if (r.which == VanishingCase::Neither)
      CHECK(m.which == VanishingCase::Neither);
    else
      CHECK(int(m.which) == 1 - int(r.which));
    const auto w = primitive_witness(ri.lattice, ri.cone, ri.c1);
    CHECK(bool(w) == (r.which == VanishingCase::Neither));
    if (w) CHECK(oracle::q(ri.lattice.gram(), ri.c1, *w) == 0);
  }
  CHECK(counts[0] > 0);
  CHECK(counts[1] > 0);
  CHECK(counts[2] > 0);
  CHECK(degenerate < 100);
}

TEST_CASE("random nef perturbations re-classify as case (iii)", "[lattice][random]") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 1000; ++t) {
    const NullInstance ni = random_null_instance(rng, 2 + t % 5, 1 + t % 3);
    REQUIRE(oracle::q(ni.lattice.gram(), ni.eta, ni.eta) == 0);
    const NefPerturbation np = nef_perturbation(ni.lattice, ni.eta, ni.omega, ni.eps);
    CHECK(np.lambda > 0);
    CHECK(np.q_kahler_shifted < 0);
    CHECK_NOTHROW(validate_cone(ni.lattice, np.witness_cone));
    CHECK(classify(ni.lattice, np.witness_cone, np.shifted, 2).which == VanishingCase::Neither);
  }
}
