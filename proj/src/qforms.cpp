#include "qdc/qforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdc {

namespace {

const GaussRat kI = GaussRat::i();
const GaussRat kHalf = GaussRat(Rational(1, 2));

std::vector<Vec> to_vectors(const std::vector<ExteriorForm>& forms, int degree) {
  std::vector<Vec> out;
  for (const auto& w : forms) out.push_back(w.to_vector(degree));
  return out;
}

}  // namespace

Sl2Action su2_on_forms(const FlatModel& m, int degree) {
  if (degree < 0 || degree > m.real_dim()) throw std::invalid_argument("form degree out of range");
  const SparseMat wi = m.derivation(Structure::I).matrix(degree);
  const SparseMat wj = m.derivation(Structure::J).matrix(degree);
  const SparseMat wk = m.derivation(Structure::K).matrix(degree);
  Sl2Action a;
  a.h = -kI * wi;
  a.f = kHalf * (wj - kI * wk);
  a.g = -kHalf * (wj + kI * wk);
  return a;
}

ExteriorForm WeightSplit::project(const FlatModel& m, const ExteriorForm& w) const {
  if (w.is_zero()) return ExteriorForm(m.real_dim());
  return ExteriorForm::from_vector(m.real_dim(), degree, projection * w.to_vector(degree));
}

WeightSplit weight_split(const FlatModel& m, int degree) {
  WeightSplit s;
  s.degree = degree;
  s.decomposition = weight_decompose(su2_on_forms(m, degree));
  s.dim = int(s.decomposition.dim);
  for (const auto& [k, strings] : s.decomposition.strings) {
    auto basis = s.decomposition.isotypic_basis(k);
    auto& target = (k == degree) ? s.plus : s.rest;
    target.insert(target.end(), basis.begin(), basis.end());
  }
  // P = B diag(1..1, 0..0) B^{-1} with B = [plus | rest].
  const Index n = s.dim;
  DenseMat b(n, n);
  Index col = 0;
  for (const auto& v : s.plus) b.col(col++) = v;
  for (const auto& v : s.rest) b.col(col++) = v;
  if (n == 0) {
    s.projection = DenseMat(0, 0);
    return s;
  }
  const DenseMat binv = inverse(b);
  const Index np = Index(s.plus.size());
  s.projection = b.leftCols(np) * binv.topRows(np);
  return s;
}

WeightSplits::WeightSplits(const FlatModel& m) {
  for (int i = 0; i <= m.real_dim(); ++i) splits_.push_back(weight_split(m, i));
}

bool ideal_check(const FlatModel& m, const std::vector<std::vector<Vec>>& rest_bases) {
  const int top = m.real_dim();
  if (int(rest_bases.size()) != top + 1) throw std::invalid_argument("need bases for degrees 0..4n");
  for (int i = 0; i < top; ++i) {
    const SpanBasis<GaussRat> target(Index(masks_of_degree(top, i + 1).size()), rest_bases[i + 1]);
    for (const auto& v : rest_bases[i]) {
      const ExteriorForm w = ExteriorForm::from_vector(top, i, v);
      for (int k = 0; k < top; ++k) {
        const ExteriorForm prod = wedge(w, ExteriorForm::basis(top, Mask{1} << k));
        if (prod.is_zero()) continue;
        if (!target.contains(prod.to_vector(i + 1))) return false;
      }
    }
  }
  return true;
}

bool ideal_check(const FlatModel& m) {
  std::vector<std::vector<Vec>> rest;
  for (int i = 0; i <= m.real_dim(); ++i) rest.push_back(weight_split(m, i).rest);
  return ideal_check(m, rest);
}

std::map<std::pair<int, int>, ExteriorForm> hodge_bigrade(const FlatModel& m, Structure s,
                                                          const ExteriorForm& w) {
  std::map<std::pair<int, int>, ExteriorForm> out;
  const int d = w.degree();
  if (d < 0) return out;
  // W_L has eigenvalue i(p - q) on (p,q)-forms; project with Lagrange polynomials.
  const ExtendedMap& der = m.derivation(s);
  for (int p = 0; p <= d; ++p) {
    const int k = 2 * p - d;
    ExteriorForm part = w;
    for (int p2 = 0; p2 <= d; ++p2) {
      if (p2 == p) continue;
      const int k2 = 2 * p2 - d;
      const GaussRat shift = GaussRat(Rational(0), Rational(k2));
      part = (der(part) - shift * part) * (GaussRat(1) / GaussRat(Rational(0), Rational(k - k2)));
    }
    if (!part.is_zero()) out.emplace(std::make_pair(p, d - p), std::move(part));
  }
  return out;
}

WeightDecomposition su2_span(const FlatModel& m, int degree, const std::vector<ExteriorForm>& forms) {
  const Sl2Action a = su2_on_forms(m, degree);
  const Index n = a.dim();
  // Close the span under h, f, g.
  RowEchelon<GaussRat> ech(n);
  std::vector<Vec> basis;
  std::vector<Vec> queue = to_vectors(forms, degree);
  while (!queue.empty()) {
    Vec v = std::move(queue.back());
    queue.pop_back();
    if (!ech.insert(to_sparse(v))) continue;
    for (const SparseMat* op : {&a.h, &a.f, &a.g}) queue.push_back(*op * v);
    basis.push_back(std::move(v));
  }
  // Restricted action in the closed basis.
  const SpanBasis<GaussRat> span(n, basis);
  const Index r = Index(basis.size());
  auto restrict = [&](const SparseMat& op) {
    std::vector<SparseVec<GaussRat>> cols;
    for (const auto& v : basis) {
      auto c = span.coordinates(op * v);
      if (!c) throw std::logic_error("su2_span: span not invariant");
      cols.push_back(to_sparse(*c));
    }
    return from_columns(r, cols);
  };
  return weight_decompose(Sl2Action{restrict(a.h), restrict(a.f), restrict(a.g)});
}

bool purity_check(const FlatModel& m, int p) {
  if (p < 0 || p > m.complex_dim()) throw std::invalid_argument("purity_check: p out of range");
  std::vector<ExteriorForm> forms;
  for (Mask k : masks_of_degree(m.complex_dim(), p)) forms.push_back(m.dzbar_wedge(k));
  const auto dec = su2_span(m, p, forms);
  return dec.multiplicity.size() == 1 && dec.multiplicity.begin()->first == p;
}

QdIso::QdIso(const FlatModel& m) : model_(&m) {
  const int top = m.complex_dim();
  for (int p = 0; p <= top; ++p) {
    std::vector<SymElement> basis;
    for (Mask k : masks_of_degree(top, p))
      for (int a = 0; a <= p; ++a) basis.push_back({a, k});
    std::vector<SparseVec<GaussRat>> cols;
    std::vector<Vec> images;
    const Sl2Action act = su2_on_forms(m, p);
    for (const auto& e : basis) {
      Vec v = m.dzbar_wedge(e.k).to_vector(p);
      for (int step = 0; step < e.a; ++step) v = act.f * v;
      const Rational scale(factorial(unsigned(p - e.a)), factorial(unsigned(p)));
      for (Index j = 0; j < v.size(); ++j) v[j] *= scale;
      cols.push_back(to_sparse(v));
      images.push_back(std::move(v));
    }
    const Index dim = Index(masks_of_degree(m.real_dim(), p).size());
    matrix_.push_back(from_columns(dim, cols));
    spans_.emplace_back(dim, images);
    basis_.push_back(std::move(basis));
  }
}

ExteriorForm QdIso::image(const SymElement& e) const {
  const int p = form_degree(e.k);
  const auto& b = basis_.at(p);
  auto it = std::find_if(b.begin(), b.end(),
                         [&](const SymElement& x) { return x.a == e.a && x.k == e.k; });
  if (it == b.end()) throw std::invalid_argument("QdIso: element out of range");
  return ExteriorForm::from_vector(model_->real_dim(), p,
                                   Vec(matrix_[p].col(Index(it - b.begin()))));
}

std::optional<Vec> QdIso::preimage(int p, const ExteriorForm& w) const {
  const Vec v = w.is_zero() ? Vec(Vec::Constant(matrix_.at(p).rows(), GaussRat(0))) : w.to_vector(p);
  return spans_.at(p).coordinates(v);
}

std::pair<int, SymElement> QdIso::multiply(const SymElement& u, const SymElement& v) {
  const int s = wedge_sign(u.k, v.k);
  return {s, SymElement{u.a + v.a, u.k | v.k}};
}

}  // namespace qdc
