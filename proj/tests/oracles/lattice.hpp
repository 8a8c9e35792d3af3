#pragma once

// Naive bilinear evaluation straight from the Gram entries.

#include "qdc/lattice.hpp"

namespace oracle {

inline qdc::Rational q(const qdc::RatMat& g, const qdc::ClassVec& a, const qdc::ClassVec& b) {
  qdc::Rational s = 0;
  for (qdc::Index i = 0; i < g.rows(); ++i)
    for (qdc::Index j = 0; j < g.cols(); ++j) s += a[i] * g(i, j) * b[j];
  return s;
}

// 0, 1, 2 for the closed dual cone, its negative and neither; -1 if all pairings vanish.
inline int sign_case(const qdc::RatMat& g, const std::vector<qdc::ClassVec>& gens, const qdc::ClassVec& c) {
  int pos = 0, neg = 0;
  for (const auto& x : gens) {
    const qdc::Rational v = q(g, c, x);
    pos += v > 0;
    neg += v < 0;
  }
  if (pos == 0 && neg == 0) return -1;
  if (neg == 0) return 0;
  if (pos == 0) return 1;
  return 2;
}

}  // namespace oracle
