#include "qdc/poly.hpp"

#include <algorithm>
#include <functional>

namespace qdc {

int Monomial::degree() const {
  int d = 0;
  for (int k = 0; k < kMaxVars; ++k) d += exponent(k);
  return d;
}

std::vector<Monomial> monomials_up_to(int nvars, int max_degree) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  for (int deg = 0; deg <= max_degree; ++deg) {
    std::function<void(int, int, std::uint64_t)> rec = [&](int k, int left, std::uint64_t acc) {
      if (k == nvars - 1) {
        out.push_back(Monomial::from_packed(acc + (std::uint64_t(left) << (8 * k))));
        return;
      }
      for (int a = left; a >= 0; --a) rec(k + 1, left - a, acc + (std::uint64_t(a) << (8 * k)));
    };
    if (nvars == 0) {
      if (deg == 0) out.push_back(Monomial());
      continue;
    }
    rec(0, deg, 0);
  }
  return out;
}

std::string to_string(Monomial m) {
  std::string s;
  for (int k = 0; k < kMaxVars; ++k) {
    const int a = m.exponent(k);
    if (a == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(k);
    if (a > 1) s += "^" + std::to_string(a);
  }
  return s.empty() ? "1" : s;
}

Poly::Poly(GaussRat c) {
  if (!c.is_zero()) terms_.emplace_back(Monomial(), std::move(c));
}

Poly::Poly(Monomial m, GaussRat c) {
  if (!c.is_zero()) terms_.emplace_back(m, std::move(c));
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

namespace {

std::vector<Poly::Term> merge(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b,
                              bool subtract) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      GaussRat c = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  terms_ = merge(terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::vector<Poly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.emplace_back(ma * mb, ca * cb);
  return Poly::from_terms(std::move(out));
}

Poly Poly::derivative(int k) const {
  // Lowering one exponent preserves the packed order among surviving terms.
  Poly p;
  for (const auto& [m, c] : terms_) {
    const int a = m.exponent(k);
    if (a == 0) continue;
    p.terms_.emplace_back(m.div_var(k), c * GaussRat(a));
  }
  return p;
}

Poly Poly::times_var(int k) const {
  Poly p;
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) p.terms_.emplace_back(m.times_var(k), c);
  return p;
}

Poly Poly::conj() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = t.second.conj();
  return p;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : p.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    if (!(m == Monomial())) s += "*" + to_string(m);
  }
  return s;
}

}  // namespace qdc
