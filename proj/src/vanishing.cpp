#include "qdc/vanishing.hpp"

#include <stdexcept>

namespace qdc {

namespace {

void require_twisted(const OperatorSet& ops, int needed) {
  if (!ops.is_twisted()) throw std::invalid_argument("operation needs a weighted bundle");
  if (ops.max_adjoint_degree() < needed)
    throw std::invalid_argument("adjoints are exact only up to degree " +
                                std::to_string(ops.max_adjoint_degree()) + ", need " +
                                std::to_string(needed));
}

SparseMat operator_matrix(const Expr& e, const AntiholomorphicBasis& basis) {
  std::vector<SparseVec<GaussRat>> cols;
  for (Index j = 0; j < basis.size(); ++j) cols.push_back(basis.coordinates(e(basis.element(j))));
  return from_columns(basis.size(), cols);
}

}  // namespace

ThetaPlus theta_plus(const OperatorSet& ops, int max_degree) {
  const FlatModel& m = ops.model();
  const Expr theta = comm(Expr(ops["dbar"]), Expr(ops["dbar_J"]));
  ThetaPlus out;
  out.form = theta(PolyForm::basis(m.real_dim(), 0, Monomial()));
  if (out.form.coefficient_degree() > 0) return out;
  // Candidate scalar read off from one coefficient of Omegabar.
  const ExteriorForm ob = m.Omega_bar();
  const Mask probe = ob.terms().front().first;
  GaussRat ratio(0);
  for (const auto& t : out.form.terms())
    if (t.mask == probe) ratio = t.coeff / ob.terms().front().second;
  if (!ratio.is_real()) return out;
  const PolyForm expected = ratio * PolyForm::constant(ob);
  if (!(expected == out.form)) return out;
  ExteriorForm constant(m.real_dim());
  for (const auto& t : out.form.terms()) constant += ExteriorForm::basis(m.real_dim(), t.mask, t.coeff);
  std::vector<int> degrees;
  for (int p = 0; p <= m.complex_dim(); ++p) degrees.push_back(p);
  const auto basis = antiholomorphic_basis(m, degrees, max_degree);
  for (const auto& w : basis) {
    ++out.checked;
    if (!(theta(w) == wedge(constant, w))) return out;
  }
  out.is_multiple = true;
  out.lambda_prime = ratio.re();
  return out;
}

Expr laplacian_dbar(const OperatorSet& ops) {
  return comm(Expr(ops["dbar"]), Expr(ops["dbar*"]));
}

Expr laplacian_dbar_J(const OperatorSet& ops) {
  return comm(Expr(ops["dbar_J"]), Expr(ops["dbar_J*"]));
}

LaplacianKernel laplacian_kernel(const OperatorSet& ops, int degree, int max_degree) {
  require_twisted(ops, max_degree);
  const AntiholomorphicBasis basis(ops.model(), degree, max_degree);
  const SparseMat lap = operator_matrix(laplacian_dbar(ops), basis);
  LaplacianKernel out;
  out.degree = degree;
  out.max_degree = max_degree;
  for (const Vec& v : kernel(lap)) out.basis.push_back(basis.from_coordinates(to_sparse(v)));
  return out;
}

PositivityReport positivity_report(const OperatorSet& ops, int degree, int max_degree) {
  require_twisted(ops, max_degree + 1);
  const FlatModel& m = ops.model();
  PositivityReport r;
  r.degree = degree;
  r.max_degree = max_degree;
  const ThetaPlus th = theta_plus(ops, 0);
  if (!th.is_multiple) throw std::logic_error("curvature term is not a multiple of L_Omegabar");
  r.lambda_prime = th.lambda_prime;
  r.shift = r.lambda_prime * (degree - m.n());
  const AntiholomorphicBasis basis(m, degree, max_degree);
  const SparseMat lap = operator_matrix(laplacian_dbar(ops), basis);
  const SparseMat lap_j = operator_matrix(laplacian_dbar_J(ops), basis);
  const SparseMat shift_id = GaussRat(r.shift) * identity<GaussRat>(basis.size());
  r.identity_holds = equal(SparseMat(lap - lap_j), shift_id);
  // <Delta_J u, v> = v^H G Delta_J u; the form G Delta_J is Hermitian.
  const SparseMat form = basis.gram(ops.bundle()) * lap_j;
  if (!equal(form, conjugate_transpose(form)))
    throw std::logic_error("Delta_dbar_J is not self-adjoint on the truncation");
  r.inertia = inertia(form);
  r.psd_certified = r.inertia.negative == 0;
  r.kernel_forced_empty = r.identity_holds && r.psd_certified && r.shift > 0;
  return r;
}

}  // namespace qdc
