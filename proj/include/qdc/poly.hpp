#pragma once

#include "qdc/gauss_rat.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qdc {

inline constexpr int kMaxVars = 8;

// Exponent vector in at most kMaxVars variables, one byte per exponent.
class Monomial {
 public:
  constexpr Monomial() = default;
  static constexpr Monomial from_packed(std::uint64_t p) {
    Monomial m;
    m.packed_ = p;
    return m;
  }
  static Monomial var(int k) { return from_packed(std::uint64_t{1} << (8 * k)); }

  int exponent(int k) const { return static_cast<int>((packed_ >> (8 * k)) & 0xff); }
  int degree() const;
  std::uint64_t packed() const { return packed_; }

  Monomial times_var(int k) const { return from_packed(packed_ + (std::uint64_t{1} << (8 * k))); }
  Monomial div_var(int k) const { return from_packed(packed_ - (std::uint64_t{1} << (8 * k))); }
  Monomial operator*(Monomial o) const { return from_packed(packed_ + o.packed_); }

  friend bool operator==(Monomial a, Monomial b) { return a.packed_ == b.packed_; }
  friend bool operator<(Monomial a, Monomial b) { return a.packed_ < b.packed_; }

 private:
  std::uint64_t packed_ = 0;
};

// All monomials in nvars variables of total degree <= max_degree, graded then lex.
std::vector<Monomial> monomials_up_to(int nvars, int max_degree);
std::string to_string(Monomial m);

// Sparse polynomial in real variables x_0..x_{nvars-1} with Q(i) coefficients.
class Poly {
 public:
  using Term = std::pair<Monomial, GaussRat>;

  Poly() = default;
  explicit Poly(GaussRat c);
  Poly(Monomial m, GaussRat c);
  static Poly var(int k) { return Poly(Monomial::var(k), GaussRat(1)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const GaussRat& c);
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const GaussRat& c) { return a *= c; }
  friend Poly operator*(const GaussRat& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  Poly derivative(int k) const;
  Poly times_var(int k) const;
  Poly conj() const;

  // Builds from unsorted terms, merging duplicates and dropping zeros.
  static Poly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

std::string to_string(const Poly& p);

}  // namespace qdc
