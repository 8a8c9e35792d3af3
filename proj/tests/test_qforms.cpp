#include "qdc/qforms.hpp"

#include "oracles/binomial.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace qdc;

namespace {

DenseMat eye(int n) { return DenseMat::Identity(n, n); }

}  // namespace

TEST_CASE("quaternion relations on 1-forms", "[qforms]") {
  for (int n : {1, 2}) {
    const FlatModel m(n);
    const DenseMat& i = m.structure(Structure::I);
    const DenseMat& j = m.structure(Structure::J);
    const DenseMat& k = m.structure(Structure::K);
    const DenseMat minus = -eye(4 * n);
    CHECK(DenseMat(i * i) == minus);
    CHECK(DenseMat(j * j) == minus);
    CHECK(DenseMat(k * k) == minus);
    CHECK(DenseMat(i * j * k) == minus);
  }
}

TEST_CASE("J exchanges holomorphic and antiholomorphic coframes", "[qforms]") {
  const FlatModel m(2);
  const auto& jay = m.automorphism(Structure::J);
  for (int a = 0; a < 2; ++a) {
    CHECK(jay(m.dz(2 * a)) == m.dzbar(2 * a + 1));
    CHECK(jay(m.dz(2 * a + 1)) == -m.dzbar(2 * a));
  }
  for (int j = 0; j < 4; ++j)
    CHECK(m.automorphism(Structure::I)(m.dz(j)) == GaussRat::i() * m.dz(j));
}

TEST_CASE("distinguished 2-forms", "[qforms]") {
  for (int n : {1, 2}) {
    const FlatModel m(n);
    for (Structure s : {Structure::I, Structure::J, Structure::K})
      CHECK(m.automorphism(s)(m.omega(s)) == m.omega(s));
    // Omega = sum dz_{2a} ^ dz_{2a+1}.
    ExteriorForm expected(m.real_dim());
    for (int a = 0; a < n; ++a) expected += wedge(m.dz(2 * a), m.dz(2 * a + 1));
    CHECK(m.Omega() == expected);
    const auto omega_types = hodge_bigrade(m, Structure::I, m.Omega());
    REQUIRE(omega_types.size() == 1);
    CHECK(omega_types.begin()->first == std::make_pair(2, 0));
    const auto wi_types = hodge_bigrade(m, Structure::I, m.omega(Structure::I));
    REQUIRE(wi_types.size() == 1);
    CHECK(wi_types.begin()->first == std::make_pair(1, 1));
    // Omega is a highest-weight vector of weight 2.
    const Sl2Action a = su2_on_forms(m, 2);
    const Vec v = m.Omega().to_vector(2);
    CHECK(Vec(a.h * v) == Vec(GaussRat(2) * v));
    CHECK(Vec(a.f * v).isZero());
  }
}

TEST_CASE("bigrading examples", "[qforms]") {
  const FlatModel m(1);
  const auto parts = hodge_bigrade(m, Structure::I, wedge(m.dzbar(0), m.dzbar(1)));
  REQUIRE(parts.size() == 1);
  CHECK(parts.begin()->first == std::make_pair(0, 2));
  const auto omega_j = hodge_bigrade(m, Structure::J, m.Omega());
  CHECK(omega_j.count({1, 1}) == 1);
  // Components reassemble the form.
  ExteriorForm sum(m.real_dim());
  for (const auto& [pq, w] : omega_j) sum += w;
  CHECK(sum == m.Omega());
}

TEST_CASE("su(2) action on forms matches the enumeration oracle", "[qforms]") {
  for (int n : {1, 2}) {
    const FlatModel m(n);
    for (int i = 0; i <= 4 * n; ++i) {
      const Sl2Action a = su2_on_forms(m, i);
      REQUIRE(verify_triple(a).ok());
      const auto dec = weight_decompose(a);
      std::map<int, int> expected;
      for (int k = 0; k <= i; ++k) {
        const auto mult = oracle::multiplicity(n, i, k);
        if (mult > 0) expected[k] = int(mult);
      }
      CHECK(dec.multiplicity == expected);
      for (const auto& [w, basis] : dec.eigenspaces)
        CHECK(Index(basis.size()) == oracle::eigenspace_dim(n, i, w));
    }
  }
}

TEST_CASE("two-forms on H split as three trivial summands plus one triplet", "[qforms]") {
  const FlatModel m(1);
  const auto dec = weight_decompose(su2_on_forms(m, 2));
  CHECK(dec.multiplicity == std::map<int, int>{{0, 3}, {2, 1}});
  const WeightSplit split = weight_split(m, 2);
  std::vector<Vec> omegas;
  for (Structure s : {Structure::I, Structure::J, Structure::K})
    omegas.push_back(m.omega(s).to_vector(2));
  CHECK(same_span<GaussRat>(split.dim, split.plus, omegas));
}

TEST_CASE("weight bound above the middle degree", "[qforms]") {
  for (int n : {1, 2}) {
    const FlatModel m(n);
    for (int i = 0; i <= 4 * n; ++i) {
      const auto dec = weight_decompose(su2_on_forms(m, i));
      CHECK(dec.max_weight() == std::min(i, 4 * n - i));
    }
  }
}

TEST_CASE("top-weight dimension", "[qforms]") {
  for (int n : {1, 2}) {
    const FlatModel m(n);
    for (int p = 0; p <= 2 * n; ++p)
      CHECK(Index(weight_split(m, p).plus.size()) == (p + 1) * oracle::binomial(2 * n, p));
    for (int p = 2 * n + 1; p <= 4 * n; ++p) CHECK(weight_split(m, p).plus.empty());
  }
}

TEST_CASE("projection is idempotent with the right kernel", "[qforms]") {
  const FlatModel m(2);
  for (int p : {2, 3}) {
    const WeightSplit s = weight_split(m, p);
    CHECK(DenseMat(s.projection * s.projection) == s.projection);
    for (const auto& v : s.rest) CHECK(Vec(s.projection * v).isZero());
    for (const auto& v : s.plus) CHECK(Vec(s.projection * v) == v);
  }
}

TEST_CASE("lower-weight forms form an ideal", "[qforms]") {
  CHECK(ideal_check(FlatModel(1)));
  CHECK(ideal_check(FlatModel(2)));
}

TEST_CASE("perturbing V^2 by a top-weight vector breaks the ideal property", "[qforms]") {
  const FlatModel m(2);
  std::vector<std::vector<Vec>> rest;
  for (int i = 0; i <= 8; ++i) rest.push_back(weight_split(m, i).rest);
  rest[2].push_back(m.Omega_bar().to_vector(2));
  CHECK_FALSE(ideal_check(m, rest));
}

TEST_CASE("purity of antiholomorphic forms", "[qforms]") {
  for (int n : {1, 2}) {
    const FlatModel m(n);
    for (int p = 0; p <= 2 * n; ++p) CHECK(purity_check(m, p));
  }
  const FlatModel m(1);
  std::vector<ExteriorForm> mixed;
  for (int j = 0; j < 2; ++j)
    for (int k = 0; k < 2; ++k) mixed.push_back(wedge(m.dz(j), m.dzbar(k)));
  const auto dec = su2_span(m, 2, mixed);
  CHECK(dec.multiplicity.size() > 1);
}

TEST_CASE("antiholomorphic forms are the lowest-weight part of the top-weight forms", "[qforms]") {
  for (int n : {1, 2}) {
    const FlatModel m(n);
    for (int p = 0; p <= 2 * n; ++p) {
      const WeightSplit s = weight_split(m, p);
      // Lowest eigenspace of h restricted to the plus part.
      const Sl2Action a = su2_on_forms(m, p);
      std::vector<Vec> lowest;
      for (const auto& v : s.plus)
        if (Vec(a.h * v) == Vec(GaussRat(-p) * v)) lowest.push_back(v);
      std::vector<Vec> antiholo;
      for (Mask k : masks_of_degree(2 * n, p)) antiholo.push_back(m.dzbar_wedge(k).to_vector(p));
      CHECK(same_span<GaussRat>(s.dim, lowest, antiholo));
    }
  }
}

TEST_CASE("structure map of the symmetric model", "[qforms]") {
  const FlatModel m(1);
  const QdIso iso(m);
  const ExteriorForm img = iso.image({1, 0b01});
  CHECK(img == m.automorphism(Structure::J)(m.dzbar(0)));
  CHECK(img == m.dz(1));
  CHECK(iso.image({0, 0b01}) == m.dzbar(0));
}

TEST_CASE("structure map is bijective onto the top-weight forms and multiplicative", "[qforms]") {
  for (int n : {1, 2}) {
    const FlatModel m(n);
    const QdIso iso(m);
    const WeightSplits splits(m);
    for (int p = 0; p <= 2 * n; ++p) {
      CHECK(rank(iso.matrix(p)) == Index(iso.basis(p).size()));
      CHECK(Index(iso.basis(p).size()) == Index(splits[p].plus.size()));
      for (const auto& e : iso.basis(p)) {
        const ExteriorForm w = iso.image(e);
        CHECK(splits[p].project(m, w) == w);
      }
    }
    for (int p = 0; p <= 2 * n; ++p)
      for (int q = 0; p + q <= 2 * n; ++q)
        for (const auto& u : iso.basis(p))
          for (const auto& v : iso.basis(q)) {
            const auto [sign, uv] = QdIso::multiply(u, v);
            const ExteriorForm direct = splits[p + q].project(m, wedge(iso.image(u), iso.image(v)));
            if (sign == 0) {
              CHECK(direct.is_zero());
            } else {
              CHECK(direct == GaussRat(sign) * iso.image(uv));
            }
          }
  }
}
