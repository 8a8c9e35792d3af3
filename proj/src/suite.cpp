#include "qdc/suite.hpp"

#include "qdc/qforms.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qdc {

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> cat = {
      {"d-squared", "d = del + dbar, d^2 = del^2 = dbar^2 = 0 on all forms", false, false},
      {"quaternionic-anticommutation", "d, d_I, d_J, d_K pairwise anticommute and square to zero",
       false, false},
      {"dbar-dbarJ-untwisted", "dbar_J^2 = 0 and {dbar, dbar_J} = 0 without twist", false, false},
      {"bicomplex-structure-map", "d_+ = x dbar_J + y dbar under the structure map", false, false},
      {"lefschetz-sl2", "H = [L, Lambda] satisfies [H, L] = 2L, [H, Lambda] = -2 Lambda", false,
       false},
      {"lefschetz-weight", "[L, Lambda] = p - n on (0,p)-forms", false, false},
      {"lefschetz-weight-as-printed", "[L, Lambda] = n - p on (0,p)-forms", false, true},
      {"lefschetz-coordinate", "[L, Lambda_theta] = -L_{J(conj theta)} for theta = dzbar_j", false,
       false},
      {"lefschetz-coordinate-as-printed", "[L, Lambda_theta] = L_{J(conj theta)}", false, true},
      {"curvature-proportional", "{dbar, dbar_J} = lambda' L with lambda' > 0", true, false},
      {"twisted-kodaira", "[L, dbar*] = -dbar_J and [L, dbar_J*] = dbar", true, false},
      {"twisted-kodaira-as-printed", "[L, dbar*] = dbar_J and [L, dbar_J*] = -dbar", true, true},
      {"kodaira-nakano", "Delta_dbar - Delta_dbar_J = [lambda' L, Lambda]", true, false},
  };
  return cat;
}

const CheckInfo& check_info(const std::string& name) {
  for (const auto& c : check_catalog())
    if (c.name == name) return c;
  throw std::invalid_argument("unknown identity: " + name);
}

void validate(const SuiteConfig& cfg) {
  if (cfg.n != 1 && cfg.n != 2) throw std::invalid_argument("n must be 1 or 2");
  if (cfg.max_degree < 0 || cfg.max_degree > 4)
    throw std::invalid_argument("degree bound must be in [0, 4]");
  if (cfg.lambdas.empty()) throw std::invalid_argument("at least one lambda is required");
  for (const auto& l : cfg.lambdas)
    if (l <= 0) throw std::invalid_argument("lambda must be positive");
  for (const auto& c : cfg.checks) check_info(c);
}

PolyForm apply_pointwise(const SparseMat& a, int p, int q, const PolyForm& w) {
  const int dim = w.dim();
  const auto src = masks_of_degree(dim, p);
  const auto dst = masks_of_degree(dim, q);
  std::vector<PolyForm::Term> out;
  for (const auto& t : w.terms()) {
    if (form_degree(t.mask) != p) continue;
    const Index col = std::lower_bound(src.begin(), src.end(), t.mask) - src.begin();
    for (SparseMat::InnerIterator it(a, col); it; ++it)
      out.push_back({dst[std::size_t(it.row())], t.mono, it.value() * t.coeff});
  }
  return PolyForm::from_terms(dim, std::move(out));
}

namespace {

std::vector<int> all_degrees(int top) {
  std::vector<int> d;
  for (int p = 0; p <= top; ++p) d.push_back(p);
  return d;
}

struct Accumulator {
  CheckResult r;

  void add(const IdentityResult& ir) {
    r.formulas.push_back(ir.formula);
    r.checked += ir.checked;
    if (!ir.pass && r.pass) {
      r.pass = false;
      r.failed_formula = ir.formula;
      r.counterexample = ir.counterexample;
    }
  }
};

Expr graded(const std::string& label, std::function<GaussRat(int)> c) {
  return Expr::graded_scalar(label, std::move(c));
}

// x^a y^b (x) w -> (b!/p!) f^a w, pointwise on a (0,p)-form with p = a + b.
class StructureMap {
 public:
  explicit StructureMap(const FlatModel& m) {
    for (int p = 0; p <= m.real_dim(); ++p) f_.push_back(su2_on_forms(m, p).f);
  }

  PolyForm operator()(int a, int p, const PolyForm& w) const {
    PolyForm x = w;
    for (int k = 0; k < a; ++k) x = apply_pointwise(f_[p], p, p, x);
    return GaussRat(Rational(factorial(p - a)) / Rational(factorial(p))) * x;
  }

 private:
  std::vector<SparseMat> f_;
};

IdentityResult check_bicomplex(const FlatModel& m, const OperatorSet& ops, int max_degree) {
  const WeightSplits splits(m);
  const StructureMap psi(m);
  IdentityResult r;
  r.label = "bicomplex-structure-map";
  r.formula = "proj d psi(x^a y^b w) = psi(x^{a+1} y^b dbar_J w) + psi(x^a y^{b+1} dbar w)";
  const OpHandle& d = ops["d"];
  const OpHandle& dbar = ops["dbar"];
  const OpHandle& dbar_j = ops["dbar_J"];
  for (int p = 0; p < m.complex_dim(); ++p) {
    const SparseMat proj = to_sparse(splits[p + 1].projection);
    const AntiholomorphicBasis basis(m, p, max_degree);
    for (Index i = 0; i < basis.size(); ++i) {
      const PolyForm w = basis.element(i);
      const PolyForm jw = dbar_j(w), bw = dbar(w);
      for (int a = 0; a <= p; ++a) {
        const PolyForm lhs = apply_pointwise(proj, p + 1, p + 1, d(psi(a, p, w)));
        const PolyForm rhs = psi(a + 1, p + 1, jw) + psi(a, p + 1, bw);
        ++r.checked;
        if (!(lhs == rhs)) {
          r.pass = false;
          r.counterexample = Counterexample{w, lhs, rhs};
          return r;
        }
      }
    }
  }
  return r;
}

std::string setting_label(int n, int d, const Rational* lambda) {
  std::string s = "n=" + std::to_string(n) + " D=" + std::to_string(d);
  if (lambda) s += " lambda=" + to_string(*lambda);
  return s;
}

void run_untwisted(const std::string& name, const FlatModel& m, const OperatorSet& u, int D,
                   Accumulator& acc) {
  const int n = m.n();
  const auto anti = antiholomorphic_basis(m, all_degrees(m.complex_dim()), D);
  const Expr L = u["L_Omegabar"], Lam = u["Lambda_Omegabar"];
  auto p_minus_n = [n](int p) { return GaussRat(p - n); };
  auto n_minus_p = [n](int p) { return GaussRat(n - p); };
  if (name == "d-squared") {
    const auto full = full_basis(m, all_degrees(m.real_dim()), D);
    const Expr d = u["d"], del = u["del"], dbar = u["dbar"];
    acc.add(verify_identity(name, d, del + dbar, full));
    acc.add(verify_identity(name, d * d, Expr::zero(2), full));
    acc.add(verify_identity(name, del * del, Expr::zero(2), full));
    acc.add(verify_identity(name, dbar * dbar, Expr::zero(2), full));
  } else if (name == "quaternionic-anticommutation") {
    const auto full = full_basis(m, all_degrees(m.real_dim()), D);
    const std::vector<std::string> ds = {"d", "d_I", "d_J", "d_K"};
    for (std::size_t a = 0; a < ds.size(); ++a)
      for (std::size_t b = a; b < ds.size(); ++b)
        acc.add(verify_identity(name, comm(u[ds[a]], u[ds[b]]), Expr::zero(2), full));
  } else if (name == "dbar-dbarJ-untwisted") {
    const Expr dbar = u["dbar"], dbar_j = u["dbar_J"];
    acc.add(verify_identity(name, comm(dbar_j, dbar_j), Expr::zero(2), anti));
    acc.add(verify_identity(name, comm(dbar, dbar_j), Expr::zero(2), anti));
  } else if (name == "bicomplex-structure-map") {
    acc.add(check_bicomplex(m, u, D));
  } else if (name == "lefschetz-sl2") {
    const Expr H = comm(L, Lam);
    acc.add(verify_identity(name, comm(H, L), GaussRat(2) * L, anti));
    acc.add(verify_identity(name, comm(H, Lam), GaussRat(-2) * Lam, anti));
  } else if (name == "lefschetz-weight") {
    acc.add(verify_identity(name, comm(L, Lam), graded("(p-n)", p_minus_n), anti));
  } else if (name == "lefschetz-weight-as-printed") {
    acc.add(verify_identity(name, comm(L, Lam), graded("(n-p)", n_minus_p), anti));
  } else if (name == "lefschetz-coordinate" || name == "lefschetz-coordinate-as-printed") {
    const GaussRat sign(name == "lefschetz-coordinate" ? -1 : 1);
    for (int j = 0; j < m.complex_dim(); ++j) {
      const std::string s = std::to_string(j);
      acc.add(verify_identity(name, comm(L, u["Lambda_dzbar" + s]), sign * Expr(u["L_Jdz" + s]), anti));
    }
  } else {
    throw std::logic_error("not an untwisted check: " + name);
  }
}

void run_twisted(const std::string& name, const FlatModel& m, const OperatorSet& t, int D,
                 Accumulator& acc) {
  const auto anti = antiholomorphic_basis(m, all_degrees(m.complex_dim()), D);
  const Expr L = t["L_Omegabar"], Lam = t["Lambda_Omegabar"];
  const Expr dbar = t["dbar"], dbar_j = t["dbar_J"];
  const Expr dbar_s = t["dbar*"], dbar_js = t["dbar_J*"];
  if (name == "curvature-proportional" || name == "kodaira-nakano") {
    const ThetaPlus th = theta_plus(t, 0);
    const Rational lp = th.is_multiple ? th.lambda_prime : Rational(0);
    acc.r.note = th.is_multiple ? "lambda' = " + to_string(lp)
                                : "curvature term is not a constant multiple of L_Omegabar";
    const Expr scaled = GaussRat(lp) * L;
    if (name == "curvature-proportional") {
      acc.add(verify_identity(name, comm(dbar, dbar_j), scaled, anti));
      if (!th.is_multiple || lp <= 0) acc.r.pass = false;
    } else {
      acc.add(verify_identity(name, laplacian_dbar(t) - laplacian_dbar_J(t), comm(scaled, Lam), anti));
      if (!th.is_multiple) acc.r.pass = false;
    }
  } else if (name == "twisted-kodaira" || name == "twisted-kodaira-as-printed") {
    const GaussRat s(name == "twisted-kodaira" ? 1 : -1);
    acc.add(verify_identity(name, comm(L, dbar_s), GaussRat(-1) * s * dbar_j, anti));
    acc.add(verify_identity(name, comm(L, dbar_js), s * dbar, anti));
  } else {
    throw std::logic_error("not a twisted check: " + name);
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const SuiteConfig& cfg) {
  validate(cfg);
  std::vector<std::string> names = cfg.checks;
  if (names.empty())
    for (const auto& c : check_catalog())
      if (!c.as_printed) names.push_back(c.name);
  // Declaration order of the catalog, independent of request order.
  std::vector<std::string> ordered;
  for (const auto& c : check_catalog())
    if (std::find(names.begin(), names.end(), c.name) != names.end()) ordered.push_back(c.name);

  const FlatModel m(cfg.n);
  const OperatorOptions opt{cfg.flip_dbar_J};
  std::vector<CheckResult> out;
  const OperatorSet u = OperatorSet::untwisted(m, opt);
  for (const auto& name : ordered) {
    if (check_info(name).twisted) continue;
    Accumulator acc;
    acc.r.name = name;
    acc.r.setting = setting_label(cfg.n, cfg.max_degree, nullptr);
    run_untwisted(name, m, u, cfg.max_degree, acc);
    out.push_back(std::move(acc.r));
  }
  const bool any_twisted = std::any_of(ordered.begin(), ordered.end(),
                                       [](const std::string& s) { return check_info(s).twisted; });
  if (any_twisted) {
    for (const auto& lambda : cfg.lambdas) {
      // Delta_dbar_J applies dbar_J* to forms of degree D + 1.
      const OperatorSet t =
          OperatorSet::twisted(m, WeightedBundle(lambda), cfg.max_degree + 1, opt);
      for (const auto& name : ordered) {
        if (!check_info(name).twisted) continue;
        Accumulator acc;
        acc.r.name = name;
        acc.r.setting = setting_label(cfg.n, cfg.max_degree, &lambda);
        run_twisted(name, m, t, cfg.max_degree, acc);
        out.push_back(std::move(acc.r));
      }
    }
  }
  return out;
}

}  // namespace qdc
