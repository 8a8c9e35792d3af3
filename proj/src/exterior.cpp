#include "qdc/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdc {

std::vector<Mask> masks_of_degree(int bits, int degree) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << bits); ++m)
    if (form_degree(m) == degree) out.push_back(m);
  return out;
}

ExteriorForm ExteriorForm::basis(int dim, Mask m, GaussRat c) {
  ExteriorForm w(dim);
  if (!c.is_zero()) w.terms_.emplace_back(m, std::move(c));
  return w;
}

ExteriorForm ExteriorForm::from_terms(int dim, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  ExteriorForm w(dim);
  for (auto& t : terms) {
    if (!w.terms_.empty() && w.terms_.back().first == t.first) {
      w.terms_.back().second += t.second;
      if (w.terms_.back().second.is_zero()) w.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      w.terms_.push_back(std::move(t));
    }
  }
  return w;
}

GaussRat ExteriorForm::coefficient(Mask m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, Mask k) { return t.first < k; });
  return (it != terms_.end() && it->first == m) ? it->second : GaussRat(0);
}

int ExteriorForm::degree() const {
  if (terms_.empty()) return -1;
  const int d = form_degree(terms_.front().first);
  for (const auto& t : terms_)
    if (form_degree(t.first) != d) throw std::domain_error("form is not homogeneous");
  return d;
}

ExteriorForm& ExteriorForm::operator+=(const ExteriorForm& o) {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  *this = from_terms(std::max(dim_, o.dim_), std::move(all));
  return *this;
}

ExteriorForm& ExteriorForm::operator-=(const ExteriorForm& o) { return *this += -o; }

ExteriorForm& ExteriorForm::operator*=(const GaussRat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

ExteriorForm ExteriorForm::operator-() const {
  ExteriorForm w = *this;
  for (auto& t : w.terms_) t.second = -t.second;
  return w;
}

ExteriorForm ExteriorForm::conj() const {
  ExteriorForm w = *this;
  for (auto& t : w.terms_) t.second = t.second.conj();
  return w;
}

Vec ExteriorForm::to_vector(int p) const {
  const MaskIndex idx(dim_, p);
  Vec v = Vec::Constant(idx.size(), GaussRat(0));
  for (const auto& [m, c] : terms_) {
    if (form_degree(m) != p) throw std::domain_error("form has a component of another degree");
    v[idx(m)] = c;
  }
  return v;
}

ExteriorForm ExteriorForm::from_vector(int dim, int p, const Vec& v) {
  const auto masks = masks_of_degree(dim, p);
  if (Index(masks.size()) != v.size()) throw std::invalid_argument("vector size mismatch");
  std::vector<Term> terms;
  for (Index k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) terms.emplace_back(masks[k], v[k]);
  ExteriorForm w(dim);
  w.terms_ = std::move(terms);
  return w;
}

ExteriorForm wedge(const ExteriorForm& a, const ExteriorForm& b) {
  std::vector<ExteriorForm::Term> out;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      out.emplace_back(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  return ExteriorForm::from_terms(std::max(a.dim(), b.dim()), std::move(out));
}

std::string to_string(const ExteriorForm& w) {
  if (w.is_zero()) return "0";
  std::string s;
  for (const auto& [m, c] : w.terms()) {
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    if (m == 0) continue;
    s += " ";
    bool first = true;
    for (int k = 0; k < 32; ++k)
      if (m & (Mask{1} << k)) {
        s += (first ? "" : "^") + std::string("dx") + std::to_string(k);
        first = false;
      }
  }
  return s;
}

MaskIndex::MaskIndex(int dim, int degree)
    : masks_(masks_of_degree(dim, degree)), pos_(std::size_t{1} << dim, -1) {
  for (Index k = 0; k < Index(masks_.size()); ++k) pos_[masks_[k]] = k;
}

ExtendedMap::ExtendedMap(const DenseMat& t, Kind kind) : dim_(int(t.rows())) {
  if (t.rows() != t.cols()) throw std::invalid_argument("ExtendedMap: matrix not square");
  std::vector<ExteriorForm> one(dim_);
  for (int k = 0; k < dim_; ++k) {
    std::vector<ExteriorForm::Term> terms;
    for (int r = 0; r < dim_; ++r)
      if (!t(r, k).is_zero()) terms.emplace_back(Mask{1} << r, t(r, k));
    one[k] = ExteriorForm::from_terms(dim_, std::move(terms));
  }
  images_.resize(std::size_t{1} << dim_);
  for (Mask m = 0; m < (Mask{1} << dim_); ++m) {
    if (kind == Kind::Multiplicative) {
      ExteriorForm acc = ExteriorForm::basis(dim_, 0);
      for (int k = 0; k < dim_; ++k)
        if (m & (Mask{1} << k)) acc = wedge(acc, one[k]);
      images_[m] = std::move(acc);
    } else {
      ExteriorForm acc(dim_);
      for (int k = 0; k < dim_; ++k) {
        if (!(m & (Mask{1} << k))) continue;
        // Replace the factor dx^k in place: dx^{<k} ^ T dx^k ^ dx^{>k}.
        const Mask below = m & ((Mask{1} << k) - 1);
        const Mask above = m & ~((Mask{2} << k) - 1);
        acc += wedge(wedge(ExteriorForm::basis(dim_, below), one[k]),
                     ExteriorForm::basis(dim_, above));
      }
      images_[m] = std::move(acc);
    }
  }
}

ExteriorForm ExtendedMap::operator()(const ExteriorForm& w) const {
  std::vector<ExteriorForm::Term> out;
  for (const auto& [m, c] : w.terms())
    for (const auto& [mm, cc] : images_[m].terms()) out.emplace_back(mm, c * cc);
  return ExteriorForm::from_terms(dim_, std::move(out));
}

SparseMat ExtendedMap::matrix(int p) const {
  const MaskIndex idx(dim_, p);
  std::vector<Eigen::Triplet<GaussRat>> trip;
  for (Index col = 0; col < idx.size(); ++col)
    for (const auto& [m, c] : images_[idx.masks()[col]].terms()) trip.emplace_back(idx(m), col, c);
  SparseMat out(idx.size(), idx.size());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

}  // namespace qdc
