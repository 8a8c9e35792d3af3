#pragma once

#include "qdc/rational.hpp"

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <string_view>

namespace qdc {

// Exact element of Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(int v) : re_(v) {}  // NOLINT: Eigen needs Scalar(0), Scalar(1)
  GaussRat(long v) : re_(v) {}  // NOLINT
  GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  const Rational& real() const { return re_; }  // Eigen spelling
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    if (!o.im_.is_zero()) im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    if (!o.im_.is_zero()) im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);
  GaussRat& operator*=(const Rational& q) {
    re_ *= q;
    if (!im_.is_zero()) im_ *= q;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator*(GaussRat a, const Rational& q) { return a *= q; }
  friend GaussRat operator*(const Rational& q, GaussRat a) { return a *= q; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

 private:
  Rational re_;
  Rational im_;
};

inline GaussRat conj(const GaussRat& z) { return z.conj(); }
inline Rational real(const GaussRat& z) { return z.re(); }
inline Rational imag(const GaussRat& z) { return z.im(); }
inline Rational abs2(const GaussRat& z) { return z.norm(); }

// Formats as "a", "bi", "a+bi" with rationals in lowest terms.
std::string to_string(const GaussRat& z);
// Inverse of to_string; also accepts "i", "-i", "1/2i".
GaussRat parse_gauss(std::string_view text);
std::ostream& operator<<(std::ostream& os, const GaussRat& z);

}  // namespace qdc

namespace Eigen {

template <>
struct NumTraits<qdc::GaussRat> : GenericNumTraits<qdc::GaussRat> {
  using Real = qdc::Rational;
  using NonInteger = qdc::GaussRat;
  using Literal = qdc::GaussRat;
  using Nested = qdc::GaussRat;
  enum {
    IsComplex = 1,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
