#pragma once

// Flat and Gaussian-twisted first-order calculus on the flat model.

#include "qdc/flat_model.hpp"
#include "qdc/polyform.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace qdc {

// Trivial line bundle with weight e^{-phi}, phi = lambda * |x|^2, lambda > 0.
class WeightedBundle {
 public:
  // Throws std::invalid_argument unless lambda > 0.
  explicit WeightedBundle(Rational lambda);
  const Rational& lambda() const { return lambda_; }
  // Normalised Gaussian moment E[x^m]; E[x_k^2] = 1/(2 lambda).
  Rational moment(Monomial m) const;

 private:
  Rational lambda_;
};

// <a, b> = sum over masks of 2^-|mask| E[a_mask conj(b_mask)].
// Throws std::invalid_argument for homogeneous forms of different degrees.
GaussRat weighted_inner_product(const WeightedBundle& b, const PolyForm& x, const PolyForm& y);

// Basis x^m dzbar_K of (0,p)-forms with coefficient degree <= max_degree,
// ordered by K then by graded monomial order.
class AntiholomorphicBasis {
 public:
  AntiholomorphicBasis(const FlatModel& m, int p, int max_degree);

  int p() const { return p_; }
  int max_degree() const { return max_degree_; }
  Index size() const { return Index(ks_.size() * monos_.size()); }
  Mask k(Index i) const { return ks_[std::size_t(i) / monos_.size()]; }
  Monomial mono(Index i) const { return monos_[std::size_t(i) % monos_.size()]; }
  std::optional<Index> index_of(Mask k, Monomial mono) const;

  PolyForm element(Index i) const;
  // Throws std::domain_error if w is not a (0,p)-form or exceeds the degree bound.
  SparseVec<GaussRat> coordinates(const PolyForm& w) const;
  PolyForm from_coordinates(const SparseVec<GaussRat>& c) const;
  SparseMat gram(const WeightedBundle& b) const;

 private:
  const FlatModel* model_;
  int p_;
  int max_degree_;
  std::vector<Mask> ks_;
  std::vector<Monomial> monos_;
  std::unordered_map<std::uint64_t, Index> mono_pos_;
  std::vector<Index> k_pos_;
  std::vector<ExteriorForm> dzbar_;  // per K position
};

// Named linear operator on polynomial forms, shifting form degree by `shift`.
struct OpHandle {
  std::string name;
  int shift = 0;
  std::function<PolyForm(const PolyForm&)> fn;

  PolyForm operator()(const PolyForm& w) const { return fn(w); }
};

struct OperatorOptions {
  bool flip_dbar_J = false;  // test hook: replaces dbar_J by -dbar_J
};

// Operators available on a model. The untwisted set acts on all forms; the twisted
// set carries a weighted bundle and Gram-exact adjoints on (0,*)-forms whose
// coefficients have degree <= max_adjoint_degree.
//
// Names: d, d_I, d_J, d_K (L^-1 d L), del, dbar, dbar_J, L_Omegabar,
// Lambda_Omegabar, L_dzbar<j>, Lambda_dzbar<j>, L_Jdz<j> (wedge with J(dz_j));
// twisted only: nabla10, dbar*, dbar_J*.
class OperatorSet {
 public:
  static OperatorSet untwisted(const FlatModel& m, OperatorOptions opt = {});
  static OperatorSet twisted(const FlatModel& m, const WeightedBundle& b, int max_adjoint_degree,
                             OperatorOptions opt = {});

  const FlatModel& model() const { return *model_; }
  bool is_twisted() const { return bundle_.has_value(); }
  const WeightedBundle& bundle() const;
  int max_adjoint_degree() const { return max_adjoint_degree_; }

  const OpHandle& operator[](const std::string& name) const;
  bool has(const std::string& name) const { return ops_.count(name) > 0; }
  std::vector<std::string> names() const;

  // Matrix of an operator from (0,p) forms of degree <= dom_degree into (0,p+shift)
  // forms of degree <= cod_degree.
  SparseMat matrix(const std::string& name, int p, int dom_degree, int cod_degree) const;

 private:
  OperatorSet(const FlatModel& m, std::optional<WeightedBundle> b, int max_adjoint_degree,
              OperatorOptions opt);
  void add(OpHandle op);
  void build_adjoints();

  const FlatModel* model_;
  std::optional<WeightedBundle> bundle_;
  int max_adjoint_degree_ = -1;
  std::map<std::string, OpHandle> ops_;
};

// Pointwise operators shared by both sets.
PolyForm wedge_constant(const ExteriorForm& a, const PolyForm& w);
// Adjoint of wedge with a constant form for the pairing induced by g/2.
PolyForm contract_constant(const ExteriorForm& a, const PolyForm& w);

}  // namespace qdc
