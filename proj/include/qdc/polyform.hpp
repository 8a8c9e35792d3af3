#pragma once

// Differential forms with polynomial coefficients on the flat model.

#include "qdc/exterior.hpp"
#include "qdc/poly.hpp"

#include <string>
#include <vector>

namespace qdc {

class PolyForm {
 public:
  struct Term {
    Mask mask;
    Monomial mono;
    GaussRat coeff;
  };

  PolyForm() = default;
  explicit PolyForm(int dim) : dim_(dim) {}
  static PolyForm from_terms(int dim, std::vector<Term> terms);
  static PolyForm basis(int dim, Mask m, Monomial mono, GaussRat c = GaussRat(1));
  static PolyForm constant(const ExteriorForm& w);
  // p * w for a polynomial p and a constant form w.
  static PolyForm product(const Poly& p, const ExteriorForm& w);

  int dim() const { return dim_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int coefficient_degree() const;  // -1 for zero

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const GaussRat& c);
  PolyForm operator-() const;
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const GaussRat& c, PolyForm a) { return a *= c; }
  friend bool operator==(const PolyForm& a, const PolyForm& b);

  // Part of form degree p.
  PolyForm degree_part(int p) const;
  std::vector<int> form_degrees() const;

 private:
  int dim_ = 0;
  std::vector<Term> terms_;
};

// Left wedge with a constant form or a polynomial form.
PolyForm wedge(const ExteriorForm& a, const PolyForm& w);
PolyForm wedge(const PolyForm& a, const PolyForm& w);
// Extension of a coframe map acting on the form part.
PolyForm apply(const ExtendedMap& t, const PolyForm& w);
PolyForm partial(const PolyForm& w, int k);
PolyForm times_var(const PolyForm& w, int k);
// Interior product with the dual vector of dx^k, acting from the left.
PolyForm interior(const PolyForm& w, int k);
PolyForm exterior_derivative(const PolyForm& w);

std::string to_string(const PolyForm& w);

}  // namespace qdc
