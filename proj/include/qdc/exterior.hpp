#pragma once

// Constant exterior forms on a real coframe dx^0..dx^{m-1}, m <= 8.

#include "qdc/linalg.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qdc {

// Bit k set <=> dx^k is a factor; factors are wedged in increasing order.
using Mask = std::uint32_t;

inline int form_degree(Mask m) { return std::popcount(m); }

// Sign of dx^a ^ dx^b relative to dx^(a|b); 0 when the factors overlap.
inline int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Mask rest = b; rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    swaps += std::popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

// Sign picked up by moving dx^k to the front of dx^m (k in m or not).
inline int front_sign(Mask m, int k) {
  return (std::popcount(m & ((Mask{1} << k) - 1)) & 1) ? -1 : 1;
}

// All masks on `bits` coframe elements with `degree` bits, ascending.
std::vector<Mask> masks_of_degree(int bits, int degree);

class ExteriorForm {
 public:
  using Term = std::pair<Mask, GaussRat>;

  ExteriorForm() = default;
  explicit ExteriorForm(int dim) : dim_(dim) {}
  static ExteriorForm basis(int dim, Mask m, GaussRat c = GaussRat(1));
  static ExteriorForm from_terms(int dim, std::vector<Term> terms);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussRat coefficient(Mask m) const;
  // Degree if homogeneous, -1 for zero, throws std::domain_error if mixed.
  int degree() const;

  ExteriorForm& operator+=(const ExteriorForm& o);
  ExteriorForm& operator-=(const ExteriorForm& o);
  ExteriorForm& operator*=(const GaussRat& c);
  ExteriorForm operator-() const;
  friend ExteriorForm operator+(ExteriorForm a, const ExteriorForm& b) { return a += b; }
  friend ExteriorForm operator-(ExteriorForm a, const ExteriorForm& b) { return a -= b; }
  friend ExteriorForm operator*(const GaussRat& c, ExteriorForm a) { return a *= c; }
  friend ExteriorForm operator*(ExteriorForm a, const GaussRat& c) { return a *= c; }
  friend bool operator==(const ExteriorForm& a, const ExteriorForm& b) {
    return a.terms_ == b.terms_;
  }

  ExteriorForm conj() const;

  // Coordinates in the basis masks_of_degree(dim, p).
  Vec to_vector(int p) const;
  static ExteriorForm from_vector(int dim, int p, const Vec& v);

 private:
  int dim_ = 0;
  std::vector<Term> terms_;
};

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b);
std::string to_string(const ExteriorForm& w);

// Index of a mask within masks_of_degree(dim, popcount(mask)).
class MaskIndex {
 public:
  MaskIndex(int dim, int degree);
  const std::vector<Mask>& masks() const { return masks_; }
  Index size() const { return Index(masks_.size()); }
  Index operator()(Mask m) const { return pos_[m]; }

 private:
  std::vector<Mask> masks_;
  std::vector<Index> pos_;
};

// Extension of a linear map T on 1-forms (column k = T dx^k) to all masks,
// either as an algebra automorphism or as a derivation.
class ExtendedMap {
 public:
  enum class Kind { Multiplicative, Derivation };
  ExtendedMap(const DenseMat& t, Kind kind);

  int dim() const { return dim_; }
  const ExteriorForm& image(Mask m) const { return images_[m]; }
  ExteriorForm operator()(const ExteriorForm& w) const;
  // Matrix on the degree-p part in the masks_of_degree basis.
  SparseMat matrix(int p) const;

 private:
  int dim_;
  std::vector<ExteriorForm> images_;
};

}  // namespace qdc
