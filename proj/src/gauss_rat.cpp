#include "qdc/gauss_rat.hpp"

#include <ostream>
#include <stdexcept>

namespace qdc {

GaussRat& GaussRat::operator*=(const GaussRat& o) {
  if (o.im_.is_zero()) {
    if (im_.is_zero()) {
      re_ *= o.re_;
    } else {
      re_ *= o.re_;
      im_ *= o.re_;
    }
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

GaussRat& GaussRat::operator/=(const GaussRat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero in Q(i)");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    if (!im_.is_zero()) im_ /= o.re_;
    return *this;
  }
  const Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string to_string(const GaussRat& z) {
  if (z.is_real()) return to_string(z.re());
  std::string im;
  if (z.im() == 1) {
    im = "i";
  } else if (z.im() == -1) {
    im = "-i";
  } else {
    im = to_string(z.im()) + "i";
  }
  if (z.re().is_zero()) return im;
  if (im.front() != '-') im = "+" + im;
  return to_string(z.re()) + im;
}

GaussRat parse_gauss(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("malformed Gaussian rational: empty");
  if (s.back() != 'i') return GaussRat(parse_rational(s));
  s.pop_back();
  // Split at the last sign that is not in leading position.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_part = split == std::string::npos ? s : s.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return GaussRat(re_part.empty() ? Rational(0) : parse_rational(re_part),
                  parse_rational(im_part));
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << to_string(z); }

}  // namespace qdc
