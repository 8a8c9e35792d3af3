#include "qdc/polyform.hpp"

#include <algorithm>
#include <set>

namespace qdc {

namespace {

bool key_less(const PolyForm::Term& a, const PolyForm::Term& b) {
  return a.mask != b.mask ? a.mask < b.mask : a.mono < b.mono;
}

bool same_key(const PolyForm::Term& a, const PolyForm::Term& b) {
  return a.mask == b.mask && a.mono == b.mono;
}

}  // namespace

PolyForm PolyForm::from_terms(int dim, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), key_less);
  PolyForm w(dim);
  w.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!w.terms_.empty() && same_key(w.terms_.back(), t)) {
      w.terms_.back().coeff += t.coeff;
      if (w.terms_.back().coeff.is_zero()) w.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      w.terms_.push_back(std::move(t));
    }
  }
  return w;
}

PolyForm PolyForm::basis(int dim, Mask m, Monomial mono, GaussRat c) {
  PolyForm w(dim);
  if (!c.is_zero()) w.terms_.push_back({m, mono, std::move(c)});
  return w;
}

PolyForm PolyForm::constant(const ExteriorForm& f) {
  PolyForm w(f.dim());
  for (const auto& [m, c] : f.terms()) w.terms_.push_back({m, Monomial(), c});
  return w;
}

PolyForm PolyForm::product(const Poly& p, const ExteriorForm& f) {
  std::vector<Term> out;
  for (const auto& [m, c] : f.terms())
    for (const auto& [mono, d] : p.terms()) out.push_back({m, mono, c * d});
  return from_terms(f.dim(), std::move(out));
}

int PolyForm::coefficient_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && key_less(terms_[i], o.terms_[j]))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || key_less(o.terms_[j], terms_[i])) {
      out.push_back(o.terms_[j++]);
    } else {
      GaussRat c = terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) out.push_back({terms_[i].mask, terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  dim_ = std::max(dim_, o.dim_);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) { return *this += -o; }

PolyForm& PolyForm::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

PolyForm PolyForm::operator-() const {
  PolyForm w = *this;
  for (auto& t : w.terms_) t.coeff = -t.coeff;
  return w;
}

bool operator==(const PolyForm& a, const PolyForm& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k)
    if (!same_key(a.terms_[k], b.terms_[k]) || a.terms_[k].coeff != b.terms_[k].coeff) return false;
  return true;
}

PolyForm PolyForm::degree_part(int p) const {
  PolyForm w(dim_);
  for (const auto& t : terms_)
    if (form_degree(t.mask) == p) w.terms_.push_back(t);
  return w;
}

std::vector<int> PolyForm::form_degrees() const {
  std::set<int> s;
  for (const auto& t : terms_) s.insert(form_degree(t.mask));
  return {s.begin(), s.end()};
}

PolyForm wedge(const ExteriorForm& a, const PolyForm& w) {
  std::vector<PolyForm::Term> out;
  out.reserve(a.terms().size() * w.terms().size());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& t : w.terms()) {
      const int s = wedge_sign(ma, t.mask);
      if (s == 0) continue;
      GaussRat c = ca * t.coeff;
      out.push_back({ma | t.mask, t.mono, s > 0 ? std::move(c) : -c});
    }
  return PolyForm::from_terms(std::max(a.dim(), w.dim()), std::move(out));
}

PolyForm wedge(const PolyForm& a, const PolyForm& w) {
  std::vector<PolyForm::Term> out;
  out.reserve(a.terms().size() * w.terms().size());
  for (const auto& ta : a.terms())
    for (const auto& t : w.terms()) {
      const int s = wedge_sign(ta.mask, t.mask);
      if (s == 0) continue;
      GaussRat c = ta.coeff * t.coeff;
      out.push_back({ta.mask | t.mask, ta.mono * t.mono, s > 0 ? std::move(c) : -c});
    }
  return PolyForm::from_terms(std::max(a.dim(), w.dim()), std::move(out));
}

PolyForm apply(const ExtendedMap& map, const PolyForm& w) {
  std::vector<PolyForm::Term> out;
  for (const auto& t : w.terms())
    for (const auto& [m, c] : map.image(t.mask).terms()) out.push_back({m, t.mono, c * t.coeff});
  return PolyForm::from_terms(w.dim(), std::move(out));
}

PolyForm partial(const PolyForm& w, int k) {
  std::vector<PolyForm::Term> out;
  for (const auto& t : w.terms()) {
    const int a = t.mono.exponent(k);
    if (a == 0) continue;
    out.push_back({t.mask, t.mono.div_var(k), t.coeff * GaussRat(a)});
  }
  return PolyForm::from_terms(w.dim(), std::move(out));
}

PolyForm times_var(const PolyForm& w, int k) {
  std::vector<PolyForm::Term> out;
  out.reserve(w.terms().size());
  for (const auto& t : w.terms()) out.push_back({t.mask, t.mono.times_var(k), t.coeff});
  return PolyForm::from_terms(w.dim(), std::move(out));
}

PolyForm interior(const PolyForm& w, int k) {
  const Mask bit = Mask{1} << k;
  std::vector<PolyForm::Term> out;
  for (const auto& t : w.terms()) {
    if (!(t.mask & bit)) continue;
    const int s = front_sign(t.mask, k);
    out.push_back({t.mask & ~bit, t.mono, s > 0 ? t.coeff : -t.coeff});
  }
  return PolyForm::from_terms(w.dim(), std::move(out));
}

PolyForm exterior_derivative(const PolyForm& w) {
  std::vector<PolyForm::Term> out;
  for (const auto& t : w.terms())
    for (int k = 0; k < w.dim(); ++k) {
      const int a = t.mono.exponent(k);
      if (a == 0) continue;
      const int s = wedge_sign(Mask{1} << k, t.mask);
      if (s == 0) continue;
      out.push_back({t.mask | (Mask{1} << k), t.mono.div_var(k), t.coeff * GaussRat(s * a)});
    }
  return PolyForm::from_terms(w.dim(), std::move(out));
}

std::string to_string(const PolyForm& w) {
  if (w.is_zero()) return "0";
  std::string s;
  for (const auto& t : w.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(t.coeff) + ")";
    if (!(t.mono == Monomial())) s += "*" + to_string(t.mono);
    for (int k = 0; k < w.dim(); ++k)
      if (t.mask & (Mask{1} << k)) s += " dx" + std::to_string(k);
  }
  return s;
}

}  // namespace qdc
