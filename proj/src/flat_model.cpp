#include "qdc/flat_model.hpp"

#include <stdexcept>

namespace qdc {

namespace {

// Signed permutation on one quaternionic block: image[k] = (sign, target) for dx^k.
using BlockAction = std::array<std::pair<int, int>, 4>;

// I dz = i dz for dz = dx^0 + i dx^1 and dx^2 + i dx^3.
constexpr BlockAction kI{{{-1, 1}, {1, 0}, {-1, 3}, {1, 2}}};
// J dz_1 = dzbar_2 and J dz_2 = -dzbar_1 within each block.
constexpr BlockAction kJ{{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}};

DenseMat block_matrix(int n, const BlockAction& act) {
  DenseMat m = DenseMat::Constant(4 * n, 4 * n, GaussRat(0));
  for (int a = 0; a < n; ++a)
    for (int k = 0; k < 4; ++k) m(4 * a + act[k].second, 4 * a + k) = GaussRat(act[k].first);
  return m;
}

ExteriorForm pair_form(int dim, int a, int c1, int c2, int sign) {
  return ExteriorForm::basis(dim, (Mask{1} << (4 * a + c1)) | (Mask{1} << (4 * a + c2)),
                             GaussRat(sign));
}

}  // namespace

FlatModel::FlatModel(int n) : n_(n) {
  if (n < 1 || n > 2) throw std::invalid_argument("FlatModel: n must be 1 or 2");
  mat_[idx(Structure::I)] = block_matrix(n, kI);
  mat_[idx(Structure::J)] = block_matrix(n, kJ);
  mat_[idx(Structure::K)] = mat_[idx(Structure::I)] * mat_[idx(Structure::J)];
  for (int s = 0; s < 3; ++s) {
    aut_.emplace_back(mat_[s], ExtendedMap::Kind::Multiplicative);
    // L^2 = -1 on 1-forms, so L^{-1} = -L.
    inv_.emplace_back(DenseMat(-mat_[s]), ExtendedMap::Kind::Multiplicative);
    der_.emplace_back(mat_[s], ExtendedMap::Kind::Derivation);
  }
  const int dim = real_dim();
  slot_.resize(std::size_t{1} << dim);
  for (Mask m = 0; m < (Mask{1} << dim); ++m) {
    AntiholomorphicSlot s;
    s.valid = true;
    s.factor = GaussRat(metric_weight(m));
    for (int j = 0; j < complex_dim(); ++j) {
      const bool re = m & (Mask{1} << (2 * j)), im = m & (Mask{1} << (2 * j + 1));
      if (re && im) {
        s.valid = false;
        break;
      }
      if (re || im) s.k |= Mask{1} << j;
      // conj of the dzbar_j coefficient of dx^{2j+1}, which is -i.
      if (im) s.factor *= GaussRat::i();
    }
    slot_[m] = s;
  }
}

ExteriorForm FlatModel::omega(Structure s) const {
  const int dim = real_dim();
  ExteriorForm w(dim);
  for (int a = 0; a < n_; ++a) {
    switch (s) {
      case Structure::I:
        w += pair_form(dim, a, 0, 1, 1) + pair_form(dim, a, 2, 3, 1);
        break;
      case Structure::J:
        w += pair_form(dim, a, 0, 2, 1) + pair_form(dim, a, 1, 3, -1);
        break;
      case Structure::K:
        w += pair_form(dim, a, 0, 3, 1) + pair_form(dim, a, 1, 2, 1);
        break;
    }
  }
  return w;
}

ExteriorForm FlatModel::Omega() const {
  return omega(Structure::J) + GaussRat::i() * omega(Structure::K);
}

ExteriorForm FlatModel::Omega_bar() const {
  return omega(Structure::J) - GaussRat::i() * omega(Structure::K);
}

ExteriorForm FlatModel::dz(int j) const {
  return ExteriorForm::basis(real_dim(), Mask{1} << (2 * j)) +
         ExteriorForm::basis(real_dim(), Mask{1} << (2 * j + 1), GaussRat::i());
}

ExteriorForm FlatModel::dzbar(int j) const { return dz(j).conj(); }

ExteriorForm FlatModel::dzbar_wedge(Mask k) const {
  ExteriorForm w = ExteriorForm::basis(real_dim(), 0);
  for (int j = 0; j < complex_dim(); ++j)
    if (k & (Mask{1} << j)) w = wedge(w, dzbar(j));
  return w;
}

Rational FlatModel::metric_weight(Mask m) {
  return Rational(1, Integer(1) << form_degree(m));
}

GaussRat FlatModel::hermitian(const ExteriorForm& a, const ExteriorForm& b) const {
  GaussRat s(0);
  for (const auto& [m, c] : a.terms()) {
    const GaussRat d = b.coefficient(m);
    if (!d.is_zero()) s += c * d.conj() * metric_weight(m);
  }
  return s;
}

}  // namespace qdc
