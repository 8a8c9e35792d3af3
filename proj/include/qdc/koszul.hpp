#pragma once

// Koszul resolution bookkeeping for restricting L^N to a complete intersection
// of ample divisors: twisted terms, their vanishing pattern and the surjectivity verdict.

#include "qdc/lattice.hpp"

#include <string>
#include <vector>

namespace qdc {

class BelowThreshold : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DivisorConfig {
  H2Lattice lattice;
  ConeSpec cone;
  ClassVec l;               // c1(L), nef with q(l,l) = 0
  std::vector<ClassVec> h;  // ample classes h_1..h_k
  long N = 1;
  int n = 1;
};

// Throws std::invalid_argument on a violated invariant (q(l,l) != 0, l not nef for the
// cone, h_i not strictly positive against the cone, q(l,h_i) <= 0). k >= n is allowed
// here and reported by the verdict.
void validate(const DivisorConfig& cfg);

struct KoszulTerm {
  std::vector<int> subset;  // 1-based divisor indices
  ClassVec cls;             // N l - sum_{i in S} h_i
};

// All 2^k terms, largest subsets first, lexicographic within a size.
std::vector<KoszulTerm> koszul_terms(const DivisorConfig& cfg);

// max over nonempty S of q(h_S,h_S)/q(l,h_S). Throws std::invalid_argument if some
// q(l,h_S) <= 0.
Rational n0_threshold(const H2Lattice& lattice, const ClassVec& l, const std::vector<ClassVec>& h);

enum class Cell { Zero, PossiblyNonzero, Input };

struct GridColumn {
  std::string label;
  std::vector<int> subset;  // empty for N l and for the restriction column
  bool restriction = false;
  std::optional<VanishingReport> report;
  std::vector<Cell> cells;  // rows 0..n
  std::string justification;
};

struct SpectralGrid {
  int n = 0;
  Rational n0;
  std::vector<GridColumn> columns;  // subtracted terms, then N l, then the restriction

  std::string render() const;
};

// Throws BelowThreshold if N <= N0.
SpectralGrid vanishing_grid(const DivisorConfig& cfg);

enum class Verdict { Surjective, Inconclusive, NotApplicable };
std::string to_string(Verdict v);

struct SurjectivityReport {
  Verdict verdict = Verdict::Inconclusive;
  std::string explanation;
  std::vector<std::string> trace;
  std::optional<SpectralGrid> grid;
  std::string qualifier;  // statement for bundles of higher rank
};

// NotApplicable when k >= n; throws BelowThreshold when N <= N0.
SurjectivityReport surjectivity_verdict(const DivisorConfig& cfg);

}  // namespace qdc
