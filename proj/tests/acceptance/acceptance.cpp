// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--criterion N]...   (default: all)

#include "qdc/cli.hpp"
#include "qdc/koszul.hpp"
#include "qdc/lattice.hpp"
#include "qdc/qforms.hpp"
#include "qdc/suite.hpp"
#include "qdc/vanishing.hpp"

#include "oracles/binomial.hpp"
#include "oracles/lattice.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace qdc;

namespace {

// Collects sub-check failures; the first few are echoed in the detail line.
struct Tally {
  std::size_t checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  bool pass() const { return failures.empty(); }
  std::string detail() const {
    std::ostringstream s;
    s << checks << " checks";
    if (!failures.empty()) {
      s << ", " << failures.size() << " failed:";
      for (std::size_t k = 0; k < failures.size() && k < 12; ++k) s << " [" << failures[k] << "]";
      if (failures.size() > 12) s << " ...";
    }
    return s.str();
  }
};

std::string str(long long v) { return std::to_string(v); }

ClassVec vec(std::initializer_list<Rational> xs) {
  ClassVec v(Index(xs.size()));
  Index k = 0;
  for (const auto& x : xs) v[k++] = x;
  return v;
}

// 1. su(2) structure of the exterior algebra.
Tally representation() {
  Tally t;
  for (int n : {1, 2}) {
    const FlatModel m(n);
    for (int i = 0; i <= 4 * n; ++i) {
      const std::string at = "n=" + str(n) + " i=" + str(i);
      const Sl2Action a = su2_on_forms(m, i);
      t.expect(verify_triple(a).ok(), at + " triple relations");
      const WeightDecomposition dec = weight_decompose(a);
      std::map<int, int> expected;
      for (int k = 0; k <= i; ++k)
        if (const auto mult = oracle::multiplicity(n, i, k); mult > 0) expected[k] = int(mult);
      t.expect(dec.multiplicity == expected, at + " multiplicities");
      for (const auto& [w, basis] : dec.eigenspaces)
        t.expect(Index(basis.size()) == oracle::eigenspace_dim(n, i, w), at + " eigenspace " + str(w));
      if (i <= 2 * n) {
        const auto top = dec.multiplicity.count(i) ? dec.multiplicity.at(i) : 0;
        t.expect(top == oracle::binomial(2 * n, i), at + " top-weight multiplicity");
        t.expect(Index(weight_split(m, i).plus.size()) == (i + 1) * oracle::binomial(2 * n, i),
                 at + " top-weight dimension");
      }
    }
  }
  for (int i = 0; i <= 6; ++i)
    for (int j = 0; j <= 6; ++j) {
      const WeightDecomposition dec = weight_decompose(tensor_product(irreducible(i), irreducible(j)));
      std::map<int, int> expected;
      for (int k : clebsch_gordan(i, j)) ++expected[k];
      std::map<int, int> oracle_cg;
      for (int k = std::abs(i - j); k <= i + j; k += 2) ++oracle_cg[k];
      t.expect(dec.multiplicity == expected && expected == oracle_cg,
               "Clebsch-Gordan " + str(i) + "x" + str(j));
    }
  return t;
}

// 2. Quaternionic Dolbeault structure.
Tally qd_structure() {
  Tally t;
  for (int n : {1, 2}) {
    const FlatModel m(n);
    const std::string at = "n=" + str(n);
    t.expect(ideal_check(m), at + " ideal");
    const WeightSplits splits(m);
    const QdIso iso(m);
    for (int p = 0; p <= 2 * n; ++p) {
      const std::string ap = at + " p=" + str(p);
      t.expect(purity_check(m, p), ap + " purity");
      // Image of the antiholomorphic forms = lowest-weight part of the top-weight forms.
      const WeightSplit& s = splits[p];
      const Sl2Action a = su2_on_forms(m, p);
      std::vector<Vec> lowest, antiholo;
      for (const auto& v : s.plus)
        if (Vec(a.h * v) == Vec(GaussRat(-p) * v)) lowest.push_back(v);
      for (Mask k : masks_of_degree(2 * n, p))
        antiholo.push_back(s.project(m, m.dzbar_wedge(k)).to_vector(p));
      t.expect(same_span<GaussRat>(s.dim, lowest, antiholo), ap + " span equality");
      t.expect(rank(iso.matrix(p)) == Index(iso.basis(p).size()) &&
                   iso.basis(p).size() == s.plus.size(),
               ap + " bijectivity");
      bool into = true;
      for (const auto& e : iso.basis(p)) {
        const ExteriorForm w = iso.image(e);
        into = into && s.project(m, w) == w;
      }
      t.expect(into, ap + " image is top-weight");
    }
    for (int p = 0; p <= 2 * n; ++p)
      for (int q = 0; p + q <= 2 * n; ++q) {
        bool ok = true;
        for (const auto& u : iso.basis(p))
          for (const auto& v : iso.basis(q)) {
            const auto [sign, uv] = QdIso::multiply(u, v);
            const ExteriorForm direct = splits[p + q].project(m, wedge(iso.image(u), iso.image(v)));
            ok = ok && (sign == 0 ? direct.is_zero() : direct == GaussRat(sign) * iso.image(uv));
          }
        t.expect(ok, at + " multiplicativity " + str(p) + "+" + str(q));
      }
  }
  return t;
}

// 3. Operator identities, including the literal sign variants.
Tally identities() {
  Tally t;
  std::vector<std::string> all;
  for (const auto& c : check_catalog()) all.push_back(c.name);
  for (int n : {1, 2}) {
    SuiteConfig cfg;
    cfg.n = n;
    cfg.max_degree = 3;
    cfg.lambdas = {Rational(1, 2), Rational(1), Rational(2)};
    cfg.checks = all;
    for (const CheckResult& r : run_suite(cfg)) t.expect(r.pass, r.name + " " + r.setting);
    const FlatModel m(n);
    for (const Rational& lambda : cfg.lambdas) {
      const auto ops = OperatorSet::twisted(m, WeightedBundle(lambda), 0);
      const ThetaPlus th = theta_plus(ops, 3);
      t.expect(th.is_multiple && th.lambda_prime > 0,
               "n=" + str(n) + " lambda=" + to_string(lambda) + " positive curvature multiple");
    }
  }
  return t;
}

// 4. Vanishing mechanism on the Gaussian model.
Tally vanishing() {
  Tally t;
  for (int n : {1, 2}) {
    const FlatModel m(n);
    const auto ops = OperatorSet::twisted(m, WeightedBundle(Rational(1)), 3);
    for (int D = 0; D <= 2; ++D)
      for (int i = 0; i <= 2 * n; ++i) {
        const std::string at = "n=" + str(n) + " D=" + str(D) + " i=" + str(i);
        const LaplacianKernel k = laplacian_kernel(ops, i, D);
        if (i > n) t.expect(k.dim() == 0, at + " kernel " + str(k.dim()));
        if (i == 0)
          t.expect(k.dim() == oracle::binomial(2 * n + D, D), at + " holomorphic count " + str(k.dim()));
        const PositivityReport r = positivity_report(ops, i, D);
        t.expect(r.identity_holds, at + " Laplacian difference");
        t.expect(r.psd_certified, at + " semidefinite certificate");
        t.expect(r.shift == r.lambda_prime * Rational(i - n) && r.lambda_prime > 0, at + " shift");
        t.expect(r.kernel_forced_empty == (i > n), at + " forced vanishing");
      }
  }
  return t;
}

// 5. Lattice classification and nef perturbation.
Tally lattice() {
  Tally t;
  std::mt19937_64 rng(20261016);
  int degenerate = 0;
  for (int k = 0; k < 1000; ++k) {
    const RandomInstance ri = random_instance(rng, 2 + k % 5, 1 + k % 4);
    const int n = 1 + k % 3;
    const std::string at = "instance " + str(k);
    const int expect = oracle::sign_case(ri.lattice.gram(), ri.cone.generators, ri.c1);
    if (expect < 0) {
      ++degenerate;
      bool threw = false;
      try {
        classify(ri.lattice, ri.cone, ri.c1, n);
      } catch (const std::invalid_argument&) {
        threw = true;
      }
      t.expect(threw, at + " degenerate pairing rejected");
      continue;
    }
    const VanishingReport r = classify(ri.lattice, ri.cone, ri.c1, n);
    t.expect(int(r.which) == expect, at + " trichotomy");
    const VanishingReport mirror = classify(ri.lattice, ri.cone, ClassVec(-ri.c1), n);
    bool serre = true;
    for (int i = 0; i <= 2 * n; ++i) serre = serre && r.vanishes(i) == mirror.vanishes(2 * n - i);
    t.expect(serre, at + " Serre mirror");
    const auto w = primitive_witness(ri.lattice, ri.cone, ri.c1);
    t.expect(bool(w) == (r.which == VanishingCase::Neither), at + " witness existence");
    if (w) t.expect(oracle::q(ri.lattice.gram(), ri.c1, *w) == 0, at + " witness orthogonal");
  }
  t.expect(degenerate < 100, "degenerate draws " + str(degenerate));
  std::mt19937_64 rng2(99);
  for (int k = 0; k < 1000; ++k) {
    const NullInstance ni = random_null_instance(rng2, 2 + k % 5, 1 + k % 3);
    const std::string at = "null instance " + str(k);
    t.expect(oracle::q(ni.lattice.gram(), ni.eta, ni.eta) == 0, at + " exact null class");
    const NefPerturbation np = nef_perturbation(ni.lattice, ni.eta, ni.omega, ni.eps);
    t.expect(np.lambda > 0 && np.q_kahler_shifted < 0, at + " perturbation");
    t.expect(classify(ni.lattice, np.witness_cone, np.shifted, 2).which == VanishingCase::Neither,
             at + " re-classification");
  }
  return t;
}

DivisorConfig rank_one(long N, int n) {
  RatMat g(2, 2);
  g << 0, 1, 1, 0;
  return {H2Lattice(g), {{vec({2, 1}), vec({1, 2})}}, vec({1, 0}), {vec({2, 1})}, N, n};
}

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

template <class E, class F>
bool throws(F f) {
  try {
    f();
  } catch (const E&) {
    return true;
  }
  return false;
}

// 6. Koszul bookkeeping.
Tally koszul() {
  Tally t;
  for (int n : {2, 3})
    for (int k : {1, 2}) {
      const std::string at = "k=" + str(k) + " n=" + str(n);
      const SpectralGrid g = vanishing_grid(k == 1 ? rank_one(12, n) : rank_two(12, n));
      bool shape = g.columns.size() == std::size_t(1 << k) + 1;
      for (const auto& col : g.columns) {
        shape = shape && col.cells.size() == std::size_t(n + 1);
        for (int row = 0; shape && row <= n; ++row) {
          const Cell want = col.restriction      ? Cell::Input
                            : col.subset.empty() ? Cell::PossiblyNonzero
                            : row == n           ? Cell::PossiblyNonzero
                                                 : Cell::Zero;
          shape = col.cells[std::size_t(row)] == want;
        }
      }
      t.expect(shape, at + " grid shape");
    }
  const DivisorConfig c = rank_one(5, 2);
  t.expect(q_eval(c.lattice, c.h[0], c.h[0]) == 4 && q_eval(c.lattice, c.l, c.h[0]) == 1, "fixture pairings");
  t.expect(n0_threshold(c.lattice, c.l, c.h) == 4, "threshold 4");
  t.expect(surjectivity_verdict(rank_one(5, 2)).verdict == Verdict::Surjective, "k=1 n=2 surjective");
  t.expect(surjectivity_verdict(rank_two(10, 3)).verdict == Verdict::Surjective, "k=2 n=3 surjective");
  t.expect(surjectivity_verdict(rank_one(5, 1)).verdict == Verdict::NotApplicable, "k=n=1 not applicable");
  t.expect(surjectivity_verdict(rank_two(10, 2)).verdict == Verdict::NotApplicable, "k=n=2 not applicable");
  for (long N : {4L, 3L, 1L})
    t.expect(throws<BelowThreshold>([&] { surjectivity_verdict(rank_one(N, 2)); }), "N=" + str(N) + " below threshold");
  t.expect(throws<BelowThreshold>([] { surjectivity_verdict(rank_two(9, 3)); }), "k=2 N=9 below threshold");
  return t;
}

struct Run {
  int code;
  std::string out;
};

Run cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str()};
}

// 7. Command-line contract.
Tally command_line() {
  Tally t;
  const std::string fx = QDC_FIXTURES;
  const std::vector<std::pair<std::vector<std::string>, int>> cases = {
      {{"verify", "--input", fx + "/verify_default.json", "--json"}, kExitOk},
      {{"verify", "--input", fx + "/verify_broken.json", "--json"}, kExitFailure},
      {{"verify", "--input", fx + "/verify_unknown_identity.json"}, kExitInvalidInput},
      {{"verify", "--lambda", "-1"}, kExitInvalidInput},
      {{"classify", "--input", fx + "/hyperbolic.json", "--class", "1,-1", "--json"}, kExitOk},
      {{"classify", "--input", fx + "/hyperbolic_flat.json", "--json"}, kExitOk},
      {{"classify", "--input", fx + "/hyperbolic.json", "--class", "0,0"}, kExitFailure},
      {{"classify", "--input", fx + "/invalid_cone.json", "--class", "1,0"}, kExitInvalidInput},
      {{"classify", "--random", "100", "--seed", "3", "--json"}, kExitOk},
      {{"koszul", "--input", fx + "/koszul_k1.json", "--json"}, kExitOk},
      {{"koszul", "--input", fx + "/koszul_k2.json", "--json"}, kExitOk},
      {{"koszul", "--input", fx + "/koszul_k_equals_n.json", "--json"}, kExitFailure},
      {{"koszul", "--input", fx + "/koszul_k1_below.json", "--json"}, kExitBelowThreshold},
      {{"su2-decompose", "--n", "2", "--json"}, kExitOk},
      {{"su2-decompose", "--n", "7"}, kExitInvalidInput},
      {{"no-such-command"}, kExitInvalidInput},
  };
  for (const auto& [args, code] : cases) {
    std::string line;
    for (const auto& a : args) line += (line.empty() ? "" : " ") + a.substr(a.rfind('/') + 1);
    const Run a = cli(args);
    t.expect(a.code == code, line + " exit " + str(a.code));
    if (a.code == kExitInvalidInput) continue;
    t.expect(cli(args).out == a.out, line + " deterministic");
  }
  const std::string round = cli({"classify", "--input", fx + "/hyperbolic_flat.json", "--json"}).out;
  t.expect(round.find("\"-1/2\"") != std::string::npos && round.find("-2/4") == std::string::npos,
           "class -2/4 canonicalised");
  const std::string lam = cli({"verify", "--n", "1", "--degree", "0", "--lambda", "6/4", "--json"}).out;
  t.expect(lam.find("\"3/2\"") != std::string::npos, "lambda 6/4 canonicalised");
  const std::string echo = cli({"classify", "--input", fx + "/hyperbolic.json", "--class", "7/3,-22/7", "--json"}).out;
  t.expect(echo.find("\"7/3\"") != std::string::npos && echo.find("\"-22/7\"") != std::string::npos,
           "class echoed exactly");
  t.expect(cli({"classify", "--input", fx + "/hyperbolic.json", "--class", "0.5,1"}).code == kExitInvalidInput,
           "decimal input rejected");
  return t;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Tally()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  app.add_option("--criterion", only, "criterion number (repeatable)")->check(CLI::Range(1, 7));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "representation suite", representation},
      {2, "quaternionic Dolbeault structure suite", qd_structure},
      {3, "operator-identity suite (n in {1,2}, D=3, lambda in {1/2,1,2})", identities},
      {4, "vanishing mechanism (lambda=1, D<=2)", vanishing},
      {5, "lattice suite (1000 + 1000 random instances)", lattice},
      {6, "Koszul suite", koszul},
      {7, "command-line contract", command_line},
  };
  bool all = true;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    const Tally t = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(1);
    s << (t.pass() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " -- " << t.detail()
      << " (" << secs << " s)";
    std::cout << s.str() << std::endl;
    all = all && t.pass();
  }
  return all ? 0 : 1;
}
