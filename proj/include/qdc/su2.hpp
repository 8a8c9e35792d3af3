#pragma once

#include "qdc/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace qdc {

// Complexified su(2) action given by a standard triple.
struct Sl2Action {
  SparseMat h;
  SparseMat f;
  SparseMat g;

  Index dim() const { return h.rows(); }
};

struct TripleCheck {
  bool hf = false;  // [h,f] = 2f
  bool hg = false;  // [h,g] = -2g
  bool fg = false;  // [f,g] = h
  bool ok() const { return hf && hg && fg; }
};

// Throws std::invalid_argument on non-square or mismatched matrices.
TripleCheck verify_triple(const Sl2Action& a);

struct WeightDecomposition {
  Index dim = 0;
  // Highest weight k -> number of copies of the irreducible module of that weight.
  std::map<int, int> multiplicity;
  // Eigenvalue of h -> basis of the eigenspace.
  std::map<int, std::vector<Vec>> eigenspaces;
  // Highest weight k -> strings v, f v, ..., f^k v starting from lowest-weight vectors.
  std::map<int, std::vector<std::vector<Vec>>> strings;

  // Basis of the isotypic component of highest weight k.
  std::vector<Vec> isotypic_basis(int k) const;
  int max_weight() const;
};

// Throws std::domain_error("not an algebraic su(2)-representation") when h is not
// diagonalisable with integer spectrum or the weight strings do not close up.
WeightDecomposition weight_decompose(const Sl2Action& a);

// Highest weights of V_i (x) V_j, largest first.
std::vector<int> clebsch_gordan(int i, int j);

// V_k realised on binary forms x^a y^(k-a), basis ordered by a = 0..k; f y = x.
Sl2Action irreducible(int k);
Sl2Action tensor_product(const Sl2Action& a, const Sl2Action& b);

template <class S>
SparseMatrix<S> kronecker(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  std::vector<Eigen::Triplet<S>> trip;
  for (Index ja = 0; ja < a.outerSize(); ++ja)
    for (typename SparseMatrix<S>::InnerIterator ia(a, ja); ia; ++ia)
      for (Index jb = 0; jb < b.outerSize(); ++jb)
        for (typename SparseMatrix<S>::InnerIterator ib(b, jb); ib; ++ib)
          trip.emplace_back(ia.row() * b.rows() + ib.row(), ja * b.cols() + jb,
                            ia.value() * ib.value());
  SparseMatrix<S> m(a.rows() * b.rows(), a.cols() * b.cols());
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b);

}  // namespace qdc
