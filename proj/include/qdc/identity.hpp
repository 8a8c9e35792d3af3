#pragma once

// Operator expressions and exhaustive identity checks on finite bases.

#include "qdc/calculus.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qdc {

// Linear operator expression over OpHandles, evaluated lazily on forms.
class Expr {
 public:
  Expr(const OpHandle& op);  // NOLINT: operators promote to expressions
  static Expr zero(int shift = 0);
  static Expr identity();
  // Multiplication by c(p) on the form-degree-p part.
  static Expr graded_scalar(std::string label, std::function<GaussRat(int)> c);

  int shift() const;
  bool odd() const { return shift() % 2 != 0; }
  std::string str() const;
  PolyForm operator()(const PolyForm& w) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const GaussRat& c, const Expr& a);
  // Composition: (a * b)(w) = a(b(w)).
  friend Expr operator*(const Expr& a, const Expr& b);
  // Graded commutator a b - (-1)^{|a||b|} b a.
  friend Expr comm(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const GaussRat& c, const Expr& a);
Expr operator*(const Expr& a, const Expr& b);
Expr comm(const Expr& a, const Expr& b);

struct Counterexample {
  PolyForm input;
  PolyForm lhs;
  PolyForm rhs;
};

struct IdentityResult {
  std::string label;
  std::string formula;
  bool pass = true;
  std::size_t checked = 0;
  std::optional<Counterexample> counterexample;
};

// Compares lhs and rhs on every basis element; stops at the first mismatch.
IdentityResult verify_identity(const std::string& label, const Expr& lhs, const Expr& rhs,
                               const std::vector<PolyForm>& basis);

// x^m dx^I for all masks of the given degrees and all monomials of degree <= D.
std::vector<PolyForm> full_basis(const FlatModel& m, const std::vector<int>& degrees, int max_degree);
// x^m dzbar_K for the given (0,p) degrees and all monomials of degree <= D.
std::vector<PolyForm> antiholomorphic_basis(const FlatModel& m, const std::vector<int>& degrees,
                                            int max_degree);

}  // namespace qdc
