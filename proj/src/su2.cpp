#include "qdc/su2.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdc {

SparseMat commutator(const SparseMat& a, const SparseMat& b) {
  return SparseMat(a * b) - SparseMat(b * a);
}

TripleCheck verify_triple(const Sl2Action& a) {
  const Index n = a.h.rows();
  for (const SparseMat* m : {&a.h, &a.f, &a.g})
    if (m->rows() != n || m->cols() != n)
      throw std::invalid_argument("sl2 triple: matrices must be square of equal size");
  TripleCheck c;
  c.hf = equal(commutator(a.h, a.f), SparseMat(GaussRat(2) * a.f));
  c.hg = equal(commutator(a.h, a.g), SparseMat(GaussRat(-2) * a.g));
  c.fg = equal(commutator(a.f, a.g), a.h);
  return c;
}

namespace {

[[noreturn]] void not_algebraic() {
  throw std::domain_error("not an algebraic su(2)-representation");
}

std::vector<Vec> eigenspace(const SparseMat& h, int lambda) {
  SparseMat shifted = h - GaussRat(lambda) * identity<GaussRat>(h.rows());
  return kernel(shifted);
}

Vec apply(const SparseMat& m, const Vec& v) { return m * v; }

bool is_zero_vec(const Vec& v) {
  for (Index k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) return false;
  return true;
}

}  // namespace

std::vector<Vec> WeightDecomposition::isotypic_basis(int k) const {
  std::vector<Vec> out;
  auto it = strings.find(k);
  if (it == strings.end()) return out;
  for (const auto& s : it->second) out.insert(out.end(), s.begin(), s.end());
  return out;
}

int WeightDecomposition::max_weight() const {
  return multiplicity.empty() ? -1 : multiplicity.rbegin()->first;
}

WeightDecomposition weight_decompose(const Sl2Action& a) {
  if (!verify_triple(a).ok()) not_algebraic();
  WeightDecomposition out;
  const Index n = a.dim();
  out.dim = n;
  // Weights of an n-dimensional module lie in [-(n-1), n-1].
  Index found = 0;
  for (int lam = -int(n) + 1; lam <= int(n) - 1 && found < n; ++lam) {
    auto basis = eigenspace(a.h, lam);
    if (basis.empty()) continue;
    found += Index(basis.size());
    out.eigenspaces.emplace(lam, std::move(basis));
  }
  if (found != n) not_algebraic();

  Index covered = 0;
  for (const auto& [lam, basis] : out.eigenspaces) {
    if (lam > 0) break;
    const int k = -lam;
    // Lowest-weight vectors of weight -k: ker g restricted to the eigenspace.
    std::vector<SparseVec<GaussRat>> cols;
    for (const auto& v : basis) cols.push_back(to_sparse(Vec(a.g * v)));
    const SparseMat gb = from_columns(n, cols);
    const auto ker = kernel(gb);
    if (ker.empty()) continue;
    std::vector<std::vector<Vec>> strings;
    for (const auto& c : ker) {
      Vec v = Vec::Constant(n, GaussRat(0));
      for (Index j = 0; j < Index(basis.size()); ++j)
        if (!c[j].is_zero()) v += c[j] * basis[j];
      std::vector<Vec> s{v};
      for (int step = 0; step < k; ++step) s.push_back(apply(a.f, s.back()));
      if (is_zero_vec(s.back()) || !is_zero_vec(apply(a.f, s.back()))) not_algebraic();
      strings.push_back(std::move(s));
    }
    covered += Index(ker.size()) * (k + 1);
    out.multiplicity[k] = int(ker.size());
    out.strings.emplace(k, std::move(strings));
  }
  if (covered != n) not_algebraic();
  return out;
}

std::vector<int> clebsch_gordan(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("clebsch_gordan: weights must be nonnegative");
  if (i > j) std::swap(i, j);
  std::vector<int> out;
  for (int k = i + j; k >= j - i; k -= 2) out.push_back(k);
  return out;
}

Sl2Action irreducible(int k) {
  if (k < 0) throw std::invalid_argument("irreducible: weight must be nonnegative");
  const Index n = k + 1;
  std::vector<Eigen::Triplet<GaussRat>> th, tf, tg;
  for (int a = 0; a <= k; ++a) {
    const int b = k - a;
    th.emplace_back(a, a, GaussRat(a - b));
    if (b > 0) tf.emplace_back(a + 1, a, GaussRat(b));   // f(x^a y^b) = b x^(a+1) y^(b-1)
    if (a > 0) tg.emplace_back(a - 1, a, GaussRat(a));   // g(x^a y^b) = a x^(a-1) y^(b+1)
  }
  Sl2Action s{SparseMat(n, n), SparseMat(n, n), SparseMat(n, n)};
  s.h.setFromTriplets(th.begin(), th.end());
  s.f.setFromTriplets(tf.begin(), tf.end());
  s.g.setFromTriplets(tg.begin(), tg.end());
  return s;
}

Sl2Action tensor_product(const Sl2Action& a, const Sl2Action& b) {
  const SparseMat ia = identity<GaussRat>(a.dim());
  const SparseMat ib = identity<GaussRat>(b.dim());
  return {SparseMat(kronecker(a.h, ib) + kronecker(ia, b.h)),
          SparseMat(kronecker(a.f, ib) + kronecker(ia, b.f)),
          SparseMat(kronecker(a.g, ib) + kronecker(ia, b.g))};
}

}  // namespace qdc
