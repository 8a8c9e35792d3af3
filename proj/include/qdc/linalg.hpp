#pragma once

// Exact linear algebra over Q and Q(i) on Eigen containers.

#include "qdc/gauss_rat.hpp"

#include <Eigen/Core>
#include <Eigen/SparseCore>
#include <boost/multiprecision/eigen.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qdc {

using Index = Eigen::Index;

template <class S>
using DenseMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;
template <class S>
using SparseMatrix = Eigen::SparseMatrix<S, Eigen::ColMajor>;

using DenseMat = DenseMatrix<GaussRat>;
using Vec = Vector<GaussRat>;
using SparseMat = SparseMatrix<GaussRat>;

// Sorted (index, value) list with no explicit zeros.
template <class S>
using SparseVec = std::vector<std::pair<Index, S>>;

inline bool is_zero(const GaussRat& z) { return z.is_zero(); }
inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline Rational conj(const Rational& q) { return q; }
inline Rational real(const Rational& q) { return q; }

template <class S>
SparseVec<S> to_sparse(const Vector<S>& v) {
  SparseVec<S> out;
  for (Index k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) out.emplace_back(k, v[k]);
  return out;
}

template <class S>
SparseMatrix<S> to_sparse(const DenseMatrix<S>& a) {
  std::vector<Eigen::Triplet<S>> trip;
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      if (!is_zero(a(i, j))) trip.emplace_back(i, j, a(i, j));
  SparseMatrix<S> out(a.rows(), a.cols());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

template <class S>
Vector<S> to_dense(const SparseVec<S>& v, Index size) {
  Vector<S> out = Vector<S>::Constant(size, S(0));
  for (const auto& [k, c] : v) out[k] = c;
  return out;
}

template <class S>
SparseVec<S> column(const SparseMatrix<S>& m, Index j) {
  SparseVec<S> out;
  for (typename SparseMatrix<S>::InnerIterator it(m, j); it; ++it)
    if (!is_zero(it.value())) out.emplace_back(it.row(), it.value());
  return out;
}

template <class S>
SparseMatrix<S> from_columns(Index rows, const std::vector<SparseVec<S>>& cols) {
  std::vector<Eigen::Triplet<S>> trip;
  for (Index j = 0; j < Index(cols.size()); ++j)
    for (const auto& [i, c] : cols[j]) trip.emplace_back(i, j, c);
  SparseMatrix<S> m(rows, Index(cols.size()));
  m.setFromTriplets(trip.begin(), trip.end());
  return m;
}

template <class S>
bool is_zero_matrix(const SparseMatrix<S>& m) {
  for (Index j = 0; j < m.outerSize(); ++j)
    for (typename SparseMatrix<S>::InnerIterator it(m, j); it; ++it)
      if (!is_zero(it.value())) return false;
  return true;
}

template <class S>
bool equal(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return is_zero_matrix(SparseMatrix<S>(a - b));
}

template <class S>
SparseMatrix<S> identity(Index n) {
  SparseMatrix<S> m(n, n);
  m.setIdentity();
  return m;
}

// Incremental row echelon form. Stored rows have leading coefficient 1.
// Optionally tracks each stored row as a combination of the inserted vectors.
template <class S>
class RowEchelon {
 public:
  explicit RowEchelon(Index ncols, bool track = false)
      : ncols_(ncols), track_(track), pivot_row_(ncols, -1) {}

  Index ncols() const { return ncols_; }
  Index rank() const { return Index(rows_.size()); }
  Index inserted() const { return inserted_; }

  // Returns true if v was independent of the rows inserted so far.
  bool insert(const SparseVec<S>& v) {
    std::map<Index, S> combo;
    if (track_) combo.emplace(inserted_, S(1));
    ++inserted_;
    std::map<Index, S> acc(v.begin(), v.end());
    reduce_in_place(acc, track_ ? &combo : nullptr);
    if (acc.empty()) return false;
    const S lead = acc.begin()->second;
    const S inv = S(1) / lead;
    Row row;
    row.pivot = acc.begin()->first;
    for (auto& [k, c] : acc) row.entries.emplace_back(k, c * inv);
    if (track_)
      for (auto& [k, c] : combo)
        if (!is_zero(c)) row.combo.emplace_back(k, c * inv);
    pivot_row_[row.pivot] = Index(rows_.size());
    rows_.push_back(std::move(row));
    return true;
  }

  SparseVec<S> reduce(const SparseVec<S>& v) const {
    std::map<Index, S> acc(v.begin(), v.end());
    reduce_in_place(acc, nullptr);
    return SparseVec<S>(acc.begin(), acc.end());
  }

  bool contains(const SparseVec<S>& v) const { return reduce(v).empty(); }

  // Coefficients c with v = sum_k c_k * (k-th inserted vector); requires tracking.
  std::optional<SparseVec<S>> coordinates(const SparseVec<S>& v) const {
    if (!track_) throw std::logic_error("RowEchelon: coordinates need tracking");
    std::map<Index, S> acc(v.begin(), v.end());
    std::map<Index, S> combo;
    reduce_in_place(acc, &combo);
    if (!acc.empty()) return std::nullopt;
    SparseVec<S> out;
    for (auto& [k, c] : combo)
      if (!is_zero(c)) out.emplace_back(k, -c);
    return out;
  }

  // Kernel of the matrix whose rows were inserted, one vector per free column.
  std::vector<Vector<S>> kernel() const {
    std::vector<Index> order(rows_.size());
    for (Index r = 0; r < Index(rows_.size()); ++r) order[r] = r;
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return rows_[a].pivot > rows_[b].pivot; });
    std::vector<Vector<S>> basis;
    for (Index f = 0; f < ncols_; ++f) {
      if (pivot_row_[f] >= 0) continue;
      Vector<S> v = Vector<S>::Constant(ncols_, S(0));
      v[f] = S(1);
      for (Index r : order) {
        const Row& row = rows_[r];
        S s(0);
        for (const auto& [k, c] : row.entries)
          if (k != row.pivot && !is_zero(v[k])) s += c * v[k];
        v[row.pivot] = -s;
      }
      // Normal form: first nonzero coordinate equal to 1.
      Index lead = 0;
      while (is_zero(v[lead])) ++lead;
      if (v[lead] != S(1)) {
        const S inv = S(1) / v[lead];
        for (Index k = lead; k < ncols_; ++k)
          if (!is_zero(v[k])) v[k] *= inv;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  struct Row {
    Index pivot = 0;
    SparseVec<S> entries;
    SparseVec<S> combo;
  };

  // Subtracts pivot rows until no entry sits in a pivot column. The combination
  // subtracted is accumulated into *combo when requested.
  void reduce_in_place(std::map<Index, S>& acc, std::map<Index, S>* combo) const {
    auto it = acc.begin();
    while (it != acc.end()) {
      const Index col = it->first;
      const Index r = pivot_row_[col];
      if (r < 0) {
        ++it;
        continue;
      }
      const S factor = it->second;
      const Row& row = rows_[r];
      for (const auto& [k, c] : row.entries) {
        if (k == col) continue;
        auto [pos, fresh] = acc.try_emplace(k, S(0));
        pos->second -= factor * c;
        if (is_zero(pos->second)) acc.erase(pos);
      }
      if (combo)
        for (const auto& [k, c] : row.combo) {
          auto [pos, fresh] = combo->try_emplace(k, S(0));
          pos->second -= factor * c;
        }
      it = acc.erase(it);
    }
    if (combo)
      for (auto c = combo->begin(); c != combo->end();)
        c = is_zero(c->second) ? combo->erase(c) : std::next(c);
  }

  Index ncols_;
  bool track_;
  Index inserted_ = 0;
  std::vector<Index> pivot_row_;
  std::vector<Row> rows_;
};

template <class S>
RowEchelon<S> row_echelon(const SparseMatrix<S>& m) {
  Eigen::SparseMatrix<S, Eigen::RowMajor> rm(m);
  RowEchelon<S> ech(m.cols());
  for (Index i = 0; i < rm.outerSize(); ++i) {
    SparseVec<S> row;
    for (typename Eigen::SparseMatrix<S, Eigen::RowMajor>::InnerIterator it(rm, i); it; ++it)
      if (!is_zero(it.value())) row.emplace_back(it.col(), it.value());
    ech.insert(row);
  }
  return ech;
}

template <class S>
std::vector<Vector<S>> kernel(const SparseMatrix<S>& m) {
  return row_echelon(m).kernel();
}

template <class S>
Index rank(const SparseMatrix<S>& m) {
  return row_echelon(m).rank();
}

// Span of a fixed list of vectors with exact membership and coordinate queries.
template <class S>
class SpanBasis {
 public:
  SpanBasis(Index dim, const std::vector<Vector<S>>& vectors) : ech_(dim, true) {
    for (const auto& v : vectors) ech_.insert(to_sparse(v));
    count_ = Index(vectors.size());
  }
  Index dim() const { return ech_.rank(); }
  Index count() const { return count_; }
  bool contains(const Vector<S>& v) const { return ech_.contains(to_sparse(v)); }
  std::optional<Vector<S>> coordinates(const Vector<S>& v) const {
    auto c = ech_.coordinates(to_sparse(v));
    if (!c) return std::nullopt;
    return to_dense(*c, count_);
  }

 private:
  RowEchelon<S> ech_;
  Index count_ = 0;
};

template <class S>
bool same_span(Index dim, const std::vector<Vector<S>>& a, const std::vector<Vector<S>>& b) {
  SpanBasis<S> sa(dim, a), sb(dim, b);
  if (sa.dim() != sb.dim()) return false;
  for (const auto& v : b)
    if (!sa.contains(v)) return false;
  return true;
}

// Dense exact LU with nonzero pivoting. Throws std::domain_error when singular.
template <class S>
class DenseLU {
 public:
  explicit DenseLU(DenseMatrix<S> a) : lu_(std::move(a)), perm_(lu_.rows()) {
    const Index n = lu_.rows();
    if (lu_.cols() != n) throw std::invalid_argument("DenseLU: matrix not square");
    for (Index k = 0; k < n; ++k) perm_[k] = k;
    for (Index k = 0; k < n; ++k) {
      Index p = k;
      while (p < n && is_zero(lu_(p, k))) ++p;
      if (p == n) throw std::domain_error("singular matrix");
      if (p != k) {
        lu_.row(p).swap(lu_.row(k));
        std::swap(perm_[p], perm_[k]);
      }
      const S inv = S(1) / lu_(k, k);
      for (Index i = k + 1; i < n; ++i) {
        if (is_zero(lu_(i, k))) continue;
        const S f = lu_(i, k) * inv;
        lu_(i, k) = f;
        for (Index j = k + 1; j < n; ++j)
          if (!is_zero(lu_(k, j))) lu_(i, j) -= f * lu_(k, j);
      }
    }
  }

  Vector<S> solve(const Vector<S>& b) const {
    const Index n = lu_.rows();
    Vector<S> y(n);
    for (Index i = 0; i < n; ++i) {
      S s = b[perm_[i]];
      for (Index j = 0; j < i; ++j)
        if (!is_zero(lu_(i, j)) && !is_zero(y[j])) s -= lu_(i, j) * y[j];
      y[i] = s;
    }
    for (Index i = n; i-- > 0;) {
      S s = y[i];
      for (Index j = i + 1; j < n; ++j)
        if (!is_zero(lu_(i, j)) && !is_zero(y[j])) s -= lu_(i, j) * y[j];
      y[i] = s / lu_(i, i);
    }
    return y;
  }

 private:
  DenseMatrix<S> lu_;
  std::vector<Index> perm_;
};

template <class S>
DenseMatrix<S> inverse(const DenseMatrix<S>& a) {
  DenseLU<S> lu(a);
  const Index n = a.rows();
  DenseMatrix<S> inv(n, n);
  for (Index j = 0; j < n; ++j) {
    Vector<S> e = Vector<S>::Constant(n, S(0));
    e[j] = S(1);
    inv.col(j) = lu.solve(e);
  }
  return inv;
}

// Connected components of the sparsity graph of a square matrix.
template <class S>
std::vector<std::vector<Index>> sparsity_blocks(const SparseMatrix<S>& m) {
  const Index n = m.rows();
  std::vector<Index> parent(n);
  for (Index k = 0; k < n; ++k) parent[k] = k;
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Index j = 0; j < m.outerSize(); ++j)
    for (typename SparseMatrix<S>::InnerIterator it(m, j); it; ++it)
      if (!is_zero(it.value())) {
        const Index a = find(it.row()), b = find(j);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
  std::map<Index, std::vector<Index>> groups;
  for (Index k = 0; k < n; ++k) groups[find(k)].push_back(k);
  std::vector<std::vector<Index>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;
}

// Solver for a nonsingular (typically Hermitian positive definite) Gram matrix,
// factored block by block along its sparsity components.
template <class S>
class BlockSolver {
 public:
  explicit BlockSolver(const SparseMatrix<S>& gram) : n_(gram.rows()), where_(gram.rows()) {
    if (gram.rows() != gram.cols()) throw std::invalid_argument("Gram matrix not square");
    blocks_ = sparsity_blocks(gram);
    for (Index b = 0; b < Index(blocks_.size()); ++b) {
      const auto& idx = blocks_[b];
      for (Index k = 0; k < Index(idx.size()); ++k) where_[idx[k]] = {b, k};
      DenseMatrix<S> d = DenseMatrix<S>::Constant(Index(idx.size()), Index(idx.size()), S(0));
      for (Index c = 0; c < Index(idx.size()); ++c)
        for (typename SparseMatrix<S>::InnerIterator it(gram, idx[c]); it; ++it)
          d(where_[it.row()].second, c) = it.value();
      try {
        lus_.emplace_back(std::move(d));
      } catch (const std::domain_error&) {
        throw std::domain_error("degenerate inner product");
      }
    }
  }

  Index size() const { return n_; }

  SparseVec<S> solve(const SparseVec<S>& b) const {
    std::map<Index, Vector<S>> rhs;
    for (const auto& [i, c] : b) {
      const auto [blk, pos] = where_[i];
      auto [it, fresh] = rhs.try_emplace(blk);
      if (fresh) it->second = Vector<S>::Constant(Index(blocks_[blk].size()), S(0));
      it->second[pos] = c;
    }
    SparseVec<S> out;
    for (auto& [blk, v] : rhs) {
      const Vector<S> x = lus_[blk].solve(v);
      for (Index k = 0; k < x.size(); ++k)
        if (!is_zero(x[k])) out.emplace_back(blocks_[blk][k], x[k]);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

 private:
  Index n_;
  std::vector<std::vector<Index>> blocks_;
  std::vector<std::pair<Index, Index>> where_;
  std::vector<DenseLU<S>> lus_;
};

template <class S>
SparseMatrix<S> conjugate_transpose(const SparseMatrix<S>& m) {
  std::vector<Eigen::Triplet<S>> trip;
  for (Index j = 0; j < m.outerSize(); ++j)
    for (typename SparseMatrix<S>::InnerIterator it(m, j); it; ++it)
      trip.emplace_back(j, it.row(), conj(it.value()));
  SparseMatrix<S> out(m.cols(), m.rows());
  out.setFromTriplets(trip.begin(), trip.end());
  return out;
}

// Columns `cod_columns` of the adjoint A solving Gram_dom * A = M^H * Gram_cod.
template <class S>
SparseMatrix<S> gram_adjoint(const SparseMatrix<S>& op, const BlockSolver<S>& gram_dom,
                             const SparseMatrix<S>& gram_cod, const std::vector<Index>& cod_columns) {
  if (op.cols() != gram_dom.size() || op.rows() != gram_cod.rows())
    throw std::invalid_argument("gram_adjoint: dimension mismatch");
  const SparseMatrix<S> mh = conjugate_transpose(op);
  std::vector<SparseVec<S>> cols;
  cols.reserve(cod_columns.size());
  for (Index c : cod_columns) {
    const SparseMatrix<S> rhs = mh * gram_cod.col(c);
    cols.push_back(gram_dom.solve(column(rhs, 0)));
  }
  return from_columns(op.cols(), cols);
}

template <class S>
SparseMatrix<S> gram_adjoint(const SparseMatrix<S>& op, const SparseMatrix<S>& gram_dom,
                             const SparseMatrix<S>& gram_cod) {
  if (gram_cod.rows() != gram_cod.cols()) throw std::invalid_argument("Gram matrix not square");
  BlockSolver<S> solver(gram_dom);
  BlockSolver<S> check_cod(gram_cod);  // codomain Gram must be nondegenerate too
  std::vector<Index> all(op.rows());
  for (Index k = 0; k < op.rows(); ++k) all[k] = k;
  return gram_adjoint(op, solver, gram_cod, all);
}

struct Inertia {
  Index positive = 0;
  Index negative = 0;
  Index zero = 0;
};

// Sylvester inertia of a Hermitian matrix by exact congruence elimination.
template <class S>
Inertia inertia_dense(DenseMatrix<S> h) {
  Inertia out;
  Index n = h.rows();
  Index k = 0;
  while (k < n) {
    Index p = k;
    while (p < n && is_zero(h(p, p))) ++p;
    if (p == n) {
      // All remaining diagonal entries vanish; create one with a congruence if possible.
      Index a = -1, b = -1;
      for (Index i = k; i < n && a < 0; ++i)
        for (Index j = k; j < n; ++j)
          if (!is_zero(h(i, j))) {
            a = i;
            b = j;
            break;
          }
      if (a < 0) {
        out.zero += n - k;
        break;
      }
      const S c = conj(h(b, a));
      h.row(a) += c * h.row(b);
      h.col(a) += conj(c) * h.col(b);
      p = a;
    }
    if (p != k) {
      h.row(p).swap(h.row(k));
      h.col(p).swap(h.col(k));
    }
    const S piv = h(k, k);
    if (real(piv) > 0) {
      ++out.positive;
    } else {
      ++out.negative;
    }
    const S inv = S(1) / piv;
    for (Index i = k + 1; i < n; ++i) {
      if (is_zero(h(i, k))) continue;
      const S f = h(i, k) * inv;
      for (Index j = k + 1; j < n; ++j)
        if (!is_zero(h(k, j))) h(i, j) -= f * h(k, j);
      h(i, k) = S(0);
    }
    for (Index j = k + 1; j < n; ++j) h(k, j) = S(0);
    ++k;
  }
  return out;
}

template <class S>
Inertia inertia(const SparseMatrix<S>& h) {
  Inertia total;
  for (const auto& idx : sparsity_blocks(h)) {
    const Index m = Index(idx.size());
    DenseMatrix<S> d = DenseMatrix<S>::Constant(m, m, S(0));
    std::map<Index, Index> pos;
    for (Index k = 0; k < m; ++k) pos[idx[k]] = k;
    for (Index c = 0; c < m; ++c)
      for (typename SparseMatrix<S>::InnerIterator it(h, idx[c]); it; ++it)
        d(pos[it.row()], c) = it.value();
    const Inertia part = inertia_dense(std::move(d));
    total.positive += part.positive;
    total.negative += part.negative;
    total.zero += part.zero;
  }
  return total;
}

extern template class RowEchelon<GaussRat>;
extern template class RowEchelon<Rational>;
extern template class SpanBasis<GaussRat>;
extern template class DenseLU<GaussRat>;
extern template class DenseLU<Rational>;
extern template class BlockSolver<GaussRat>;

}  // namespace qdc
