#pragma once

// SU(2)-structure of the exterior algebra of a flat hyperkähler model.

#include "qdc/flat_model.hpp"
#include "qdc/su2.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qdc {

// h = -i W_I, f = (W_J - i W_K)/2, g = -(W_J + i W_K)/2 on the degree-i forms,
// with W_L the derivation extension of L. h acts as p - q on (p,q)-forms.
Sl2Action su2_on_forms(const FlatModel& m, int degree);

// Splitting of the degree-i forms into the top-weight part and its complement V^i.
struct WeightSplit {
  int degree = 0;
  int dim = 0;                // number of degree-i masks
  std::vector<Vec> plus;      // basis of the weight-i isotypic part
  std::vector<Vec> rest;      // basis of V^i (weights < i)
  DenseMat projection;        // onto the plus part along V^i
  WeightDecomposition decomposition;

  ExteriorForm project(const FlatModel& m, const ExteriorForm& w) const;
};

WeightSplit weight_split(const FlatModel& m, int degree);

// Cached splits for all degrees 0..4n.
class WeightSplits {
 public:
  explicit WeightSplits(const FlatModel& m);
  const WeightSplit& operator[](int degree) const { return splits_.at(degree); }
  int max_degree() const { return int(splits_.size()) - 1; }

 private:
  std::vector<WeightSplit> splits_;
};

// True iff every V^i wedged with every coordinate 1-form lies in V^{i+1}.
bool ideal_check(const FlatModel& m);
// Same check against caller-supplied bases of V^0..V^{4n} (membership by exact solve).
bool ideal_check(const FlatModel& m, const std::vector<std::vector<Vec>>& rest_bases);

// Type decomposition of a form with respect to the complex structure L: the (p,q)
// part is the i(p-q)-eigencomponent of the derivation extension of L.
std::map<std::pair<int, int>, ExteriorForm> hodge_bigrade(const FlatModel& m, Structure s,
                                                          const ExteriorForm& w);

// Weights of the SU(2)-span of the given degree-i forms.
WeightDecomposition su2_span(const FlatModel& m, int degree, const std::vector<ExteriorForm>& forms);
// True iff the SU(2)-span of the (0,p)-forms is isotypic of weight p.
bool purity_check(const FlatModel& m, int p);

// The model S^p R (x) Lambda^{0,p} with R = span(x, y) and its isomorphism onto
// the top-weight forms: x^a y^b (x) eta -> (b!/p!) f^a(eta).
struct SymElement {
  int a = 0;   // power of x; the power of y is |k| - a
  Mask k = 0;  // dzbar index set
};

class QdIso {
 public:
  explicit QdIso(const FlatModel& m);

  const FlatModel& model() const { return *model_; }
  // Basis of S^p R (x) Lambda^{0,p}, ordered by (k, a).
  const std::vector<SymElement>& basis(int p) const { return basis_.at(p); }
  ExteriorForm image(const SymElement& e) const;
  // Matrix from the S^p R (x) Lambda^{0,p} basis into degree-p forms.
  const SparseMat& matrix(int p) const { return matrix_.at(p); }
  // Coordinates of a top-weight form in basis(p); nullopt outside the image.
  std::optional<Vec> preimage(int p, const ExteriorForm& w) const;
  // Product in the symmetric model: sign and product element, sign 0 if it vanishes.
  static std::pair<int, SymElement> multiply(const SymElement& u, const SymElement& v);

 private:
  const FlatModel* model_;
  std::vector<std::vector<SymElement>> basis_;
  std::vector<SparseMat> matrix_;
  std::vector<SpanBasis<GaussRat>> spans_;
};

}  // namespace qdc
