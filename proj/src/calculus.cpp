#include "qdc/calculus.hpp"

#include <stdexcept>

namespace qdc {

namespace {

const GaussRat kI = GaussRat::i();
const GaussRat kHalf = GaussRat(Rational(1, 2));

// (1/2)(d/dx_{2j} -+ i d/dx_{2j+1}) applied to the coefficients.
PolyForm complex_partial(const PolyForm& w, int j, bool bar) {
  PolyForm re = partial(w, 2 * j);
  PolyForm im = partial(w, 2 * j + 1);
  return kHalf * (bar ? re + kI * im : re - kI * im);
}

PolyForm del(const FlatModel& m, const PolyForm& w) {
  PolyForm out(m.real_dim());
  for (int j = 0; j < m.complex_dim(); ++j) out += wedge(m.dz(j), complex_partial(w, j, false));
  return out;
}

PolyForm dbar(const FlatModel& m, const PolyForm& w) {
  PolyForm out(m.real_dim());
  for (int j = 0; j < m.complex_dim(); ++j) out += wedge(m.dzbar(j), complex_partial(w, j, true));
  return out;
}

// d(phi) of type (1,0): lambda * sum_j zbar_j dz_j.
PolyForm del_phi(const FlatModel& m, const Rational& lambda) {
  PolyForm out(m.real_dim());
  for (int j = 0; j < m.complex_dim(); ++j) {
    const Poly zbar = Poly::var(2 * j) - kI * Poly::var(2 * j + 1);
    out += PolyForm::product(GaussRat(lambda) * zbar, m.dz(j));
  }
  return out;
}

Rational double_factorial_odd(int a) {  // (a-1)!! for even a
  Rational r = 1;
  for (int k = a - 1; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace

WeightedBundle::WeightedBundle(Rational lambda) : lambda_(std::move(lambda)) {
  if (lambda_ <= 0)
    throw std::invalid_argument("weight must be strictly plurisubharmonic (lambda > 0)");
}

Rational WeightedBundle::moment(Monomial m) const {
  Rational num = 1;
  int half = 0;
  for (int k = 0; k < kMaxVars; ++k) {
    const int a = m.exponent(k);
    if (a % 2) return Rational(0);
    if (a > 2) num *= double_factorial_odd(a);
    half += a / 2;
  }
  Rational den = 1;
  const Rational two_lambda = 2 * lambda_;
  for (int k = 0; k < half; ++k) den *= two_lambda;
  return num / den;
}

GaussRat weighted_inner_product(const WeightedBundle& b, const PolyForm& x, const PolyForm& y) {
  const auto dx = x.form_degrees(), dy = y.form_degrees();
  if (dx.size() == 1 && dy.size() == 1 && dx[0] != dy[0])
    throw std::invalid_argument("inner product of forms of different degrees");
  GaussRat s(0);
  std::size_t j0 = 0;
  for (const auto& tx : x.terms()) {
    while (j0 < y.terms().size() && y.terms()[j0].mask < tx.mask) ++j0;
    for (std::size_t j = j0; j < y.terms().size() && y.terms()[j].mask == tx.mask; ++j) {
      const auto& ty = y.terms()[j];
      const Rational mom = b.moment(tx.mono * ty.mono);
      if (mom.is_zero()) continue;
      s += tx.coeff * ty.coeff.conj() * (mom * FlatModel::metric_weight(tx.mask));
    }
  }
  return s;
}

AntiholomorphicBasis::AntiholomorphicBasis(const FlatModel& m, int p, int max_degree)
    : model_(&m), p_(p), max_degree_(max_degree) {
  if (p < 0 || p > m.complex_dim()) throw std::invalid_argument("form degree out of range");
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  ks_ = masks_of_degree(m.complex_dim(), p);
  monos_ = monomials_up_to(m.real_dim(), max_degree);
  for (Index i = 0; i < Index(monos_.size()); ++i) mono_pos_[monos_[i].packed()] = i;
  k_pos_.assign(std::size_t{1} << m.complex_dim(), -1);
  for (Index i = 0; i < Index(ks_.size()); ++i) {
    k_pos_[ks_[i]] = i;
    dzbar_.push_back(m.dzbar_wedge(ks_[i]));
  }
}

std::optional<Index> AntiholomorphicBasis::index_of(Mask k, Monomial mono) const {
  if (k >= k_pos_.size() || k_pos_[k] < 0) return std::nullopt;
  auto it = mono_pos_.find(mono.packed());
  if (it == mono_pos_.end()) return std::nullopt;
  return k_pos_[k] * Index(monos_.size()) + it->second;
}

PolyForm AntiholomorphicBasis::element(Index i) const {
  return PolyForm::product(Poly(mono(i), GaussRat(1)), dzbar_[std::size_t(i) / monos_.size()]);
}

SparseVec<GaussRat> AntiholomorphicBasis::coordinates(const PolyForm& w) const {
  std::map<Index, GaussRat> acc;
  for (const auto& t : w.terms()) {
    if (form_degree(t.mask) != p_) throw std::domain_error("not a (0," + std::to_string(p_) + ")-form");
    const auto& slot = model_->antiholomorphic_slot(t.mask);
    if (!slot.valid) continue;  // must cancel; caught by the reconstruction check
    const auto idx = index_of(slot.k, t.mono);
    if (!idx) throw std::domain_error("coefficient degree exceeds truncation");
    auto [pos, fresh] = acc.try_emplace(*idx, GaussRat(0));
    pos->second += t.coeff * slot.factor;
  }
  SparseVec<GaussRat> out;
  for (auto& [k, c] : acc)
    if (!c.is_zero()) out.emplace_back(k, std::move(c));
  if (!(from_coordinates(out) == w))
    throw std::domain_error("not a (0," + std::to_string(p_) + ")-form");
  return out;
}

PolyForm AntiholomorphicBasis::from_coordinates(const SparseVec<GaussRat>& c) const {
  std::vector<PolyForm::Term> terms;
  for (const auto& [i, v] : c)
    for (const auto& [m, d] : dzbar_[std::size_t(i) / monos_.size()].terms())
      terms.push_back({m, mono(i), v * d});
  return PolyForm::from_terms(model_->real_dim(), std::move(terms));
}

SparseMat AntiholomorphicBasis::gram(const WeightedBundle& b) const {
  // dzbar_K are orthonormal, so the Gram matrix is the moment matrix per K.
  std::vector<Eigen::Triplet<GaussRat>> trip;
  const Index nm = Index(monos_.size());
  std::map<std::uint64_t, std::vector<Index>> by_parity;
  for (Index i = 0; i < nm; ++i) by_parity[monos_[i].packed() & 0x0101010101010101ULL].push_back(i);
  for (const auto& [parity, members] : by_parity)
    for (Index a : members)
      for (Index c : members) {
        const Rational mom = b.moment(monos_[a] * monos_[c]);
        if (mom.is_zero()) continue;
        for (Index kk = 0; kk < Index(ks_.size()); ++kk)
          trip.emplace_back(kk * nm + a, kk * nm + c, GaussRat(mom));
      }
  SparseMat g(size(), size());
  g.setFromTriplets(trip.begin(), trip.end());
  return g;
}

PolyForm wedge_constant(const ExteriorForm& a, const PolyForm& w) { return wedge(a, w); }

PolyForm contract_constant(const ExteriorForm& a, const PolyForm& w) {
  PolyForm out(w.dim());
  for (const auto& [mask, c] : a.terms()) {
    // Adjoint of e_{i1} ... e_{ir} is e_{ir}^* ... e_{i1}^* with e_k^* = iota_k / 2.
    PolyForm part = w;
    for (int k = 0; k < w.dim() && !part.is_zero(); ++k)
      if (mask & (Mask{1} << k)) part = interior(part, k);
    if (part.is_zero()) continue;
    out += (c.conj() * GaussRat(FlatModel::metric_weight(mask))) * part;
  }
  return out;
}

const WeightedBundle& OperatorSet::bundle() const {
  if (!bundle_) throw std::logic_error("untwisted operator set has no bundle");
  return *bundle_;
}

const OpHandle& OperatorSet::operator[](const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw std::out_of_range("unknown operator: " + name);
  return it->second;
}

std::vector<std::string> OperatorSet::names() const {
  std::vector<std::string> out;
  for (const auto& [name, op] : ops_) out.push_back(name);
  return out;
}

void OperatorSet::add(OpHandle op) {
  const std::string name = op.name;
  ops_[name] = std::move(op);
}

OperatorSet OperatorSet::untwisted(const FlatModel& m, OperatorOptions opt) {
  return OperatorSet(m, std::nullopt, -1, opt);
}

OperatorSet OperatorSet::twisted(const FlatModel& m, const WeightedBundle& b, int max_adjoint_degree,
                                 OperatorOptions opt) {
  if (max_adjoint_degree < 0) throw std::invalid_argument("adjoint degree bound must be >= 0");
  OperatorSet s(m, b, max_adjoint_degree, opt);
  s.build_adjoints();
  return s;
}

OperatorSet::OperatorSet(const FlatModel& m, std::optional<WeightedBundle> b, int max_adjoint_degree,
                         OperatorOptions opt)
    : model_(&m), bundle_(std::move(b)), max_adjoint_degree_(max_adjoint_degree) {
  const FlatModel* mp = model_;
  add({"d", 1, [](const PolyForm& w) { return exterior_derivative(w); }});
  const std::pair<const char*, Structure> structures[] = {
      {"I", Structure::I}, {"J", Structure::J}, {"K", Structure::K}};
  for (const auto& [label, s] : structures) {
    const ExtendedMap* fwd = &m.automorphism(s);
    const ExtendedMap* inv = &m.inverse_automorphism(s);
    add({std::string("d_") + label, 1, [fwd, inv](const PolyForm& w) {
           return apply(*inv, exterior_derivative(apply(*fwd, w)));
         }});
  }
  add({"del", 1, [mp](const PolyForm& w) { return del(*mp, w); }});
  add({"dbar", 1, [mp](const PolyForm& w) { return dbar(*mp, w); }});

  const ExtendedMap* jay = &m.automorphism(Structure::J);
  const ExtendedMap* jinv = &m.inverse_automorphism(Structure::J);
  if (bundle_) {
    const PolyForm dphi = del_phi(m, bundle_->lambda());
    auto nabla = [mp, dphi](const PolyForm& w) { return del(*mp, w) - wedge(dphi, w); };
    add({"nabla10", 1, nabla});
    add({"dbar_J", 1, [jay, jinv, nabla](const PolyForm& w) { return apply(*jinv, nabla(apply(*jay, w))); }});
  } else {
    add({"dbar_J", 1, [mp, jay, jinv](const PolyForm& w) {
           return apply(*jinv, del(*mp, apply(*jay, w)));
         }});
  }

  if (opt.flip_dbar_J) {
    auto fn = ops_["dbar_J"].fn;
    ops_["dbar_J"].fn = [fn](const PolyForm& w) { return -fn(w); };
  }

  const ExteriorForm omega_bar = m.Omega_bar();
  add({"L_Omegabar", 2, [omega_bar](const PolyForm& w) { return wedge_constant(omega_bar, w); }});
  add({"Lambda_Omegabar", -2,
       [omega_bar](const PolyForm& w) { return contract_constant(omega_bar, w); }});
  for (int j = 0; j < m.complex_dim(); ++j) {
    const ExteriorForm theta = m.dzbar(j);
    const ExteriorForm theta_j = m.automorphism(Structure::J)(m.dz(j));
    const std::string idx = std::to_string(j);
    add({"L_dzbar" + idx, 1, [theta](const PolyForm& w) { return wedge_constant(theta, w); }});
    add({"Lambda_dzbar" + idx, -1, [theta](const PolyForm& w) { return contract_constant(theta, w); }});
    add({"L_Jdz" + idx, 1, [theta_j](const PolyForm& w) { return wedge_constant(theta_j, w); }});
  }
}

SparseMat OperatorSet::matrix(const std::string& name, int p, int dom_degree, int cod_degree) const {
  const OpHandle& op = (*this)[name];
  const AntiholomorphicBasis dom(*model_, p, dom_degree);
  const AntiholomorphicBasis cod(*model_, p + op.shift, cod_degree);
  std::vector<SparseVec<GaussRat>> cols;
  cols.reserve(std::size_t(dom.size()));
  for (Index j = 0; j < dom.size(); ++j) cols.push_back(cod.coordinates(op(dom.element(j))));
  return from_columns(cod.size(), cols);
}

namespace {

struct AdjointBlock {
  std::shared_ptr<AntiholomorphicBasis> input;   // (0,q), degree <= e
  std::shared_ptr<AntiholomorphicBasis> output;  // (0,q-1), degree <= e+1
  SparseMat matrix;
};

PolyForm apply_adjoint(const std::vector<AdjointBlock>& blocks, int dim, const PolyForm& w) {
  PolyForm out(dim);
  for (int q : w.form_degrees()) {
    if (q == 0) continue;  // functions are annihilated
    if (q >= int(blocks.size()) || !blocks[q].input) throw std::domain_error("form degree out of range");
    const auto& blk = blocks[q];
    std::map<Index, GaussRat> acc;
    for (const auto& [j, cj] : blk.input->coordinates(w.degree_part(q)))
      for (SparseMat::InnerIterator it(blk.matrix, j); it; ++it) {
        auto [pos, fresh] = acc.try_emplace(it.row(), GaussRat(0));
        pos->second += it.value() * cj;
      }
    SparseVec<GaussRat> y;
    for (auto& [i, v] : acc)
      if (!v.is_zero()) y.emplace_back(i, std::move(v));
    out += blk.output->from_coordinates(y);
  }
  return out;
}

}  // namespace

void OperatorSet::build_adjoints() {
  const FlatModel& m = *model_;
  const WeightedBundle& b = *bundle_;
  const int e = max_adjoint_degree_;
  auto dbar_blocks = std::make_shared<std::vector<AdjointBlock>>(m.complex_dim() + 1);
  auto dbarj_blocks = std::make_shared<std::vector<AdjointBlock>>(m.complex_dim() + 1);
  for (int q = 1; q <= m.complex_dim(); ++q) {
    auto small = std::make_shared<AntiholomorphicBasis>(m, q, e);
    auto dom = std::make_shared<AntiholomorphicBasis>(m, q - 1, e + 1);
    const AntiholomorphicBasis cod(m, q, e + 2);
    const BlockSolver<GaussRat> solver(dom->gram(b));
    // Columns of the codomain Gram matrix at the inputs of degree <= e.
    std::vector<Eigen::Triplet<GaussRat>> trip;
    for (Index s = 0; s < small->size(); ++s) {
      const Index base = *cod.index_of(small->k(s), Monomial());
      const Index nm = cod.size() / Index(masks_of_degree(m.complex_dim(), q).size());
      for (Index c = 0; c < nm; ++c) {
        const Rational mom = b.moment(small->mono(s) * cod.mono(base + c));
        if (!mom.is_zero()) trip.emplace_back(base + c, s, GaussRat(mom));
      }
    }
    SparseMat gcols(cod.size(), small->size());
    gcols.setFromTriplets(trip.begin(), trip.end());
    for (auto [name, blocks] : {std::pair{"dbar", dbar_blocks}, std::pair{"dbar_J", dbarj_blocks}}) {
      const SparseMat op = matrix(name, q - 1, e + 1, e + 2);
      const SparseMat rhs = SparseMat(conjugate_transpose(op)) * gcols;
      std::vector<SparseVec<GaussRat>> cols;
      for (Index s = 0; s < rhs.cols(); ++s) cols.push_back(solver.solve(column(rhs, s)));
      (*blocks)[q] = AdjointBlock{small, dom, from_columns(dom->size(), cols)};
    }
  }
  const int dim = m.real_dim();
  add({"dbar*", -1, [dbar_blocks, dim](const PolyForm& w) { return apply_adjoint(*dbar_blocks, dim, w); }});
  add({"dbar_J*", -1,
       [dbarj_blocks, dim](const PolyForm& w) { return apply_adjoint(*dbarj_blocks, dim, w); }});
}

}  // namespace qdc
