#pragma once

// Second-cohomology lattice with its BBF form, rational polyhedral Kähler cones
// and the sign trichotomy that decides which cohomology groups vanish.

#include "qdc/linalg.hpp"

#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdc {

using ClassVec = Vector<Rational>;
using RatMat = DenseMatrix<Rational>;

// Raised when an input violates a standing hypothesis (as opposed to malformed data).
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class H2Lattice {
 public:
  // Throws std::invalid_argument unless gram is square, symmetric and nondegenerate.
  explicit H2Lattice(RatMat gram, std::optional<int> n = std::nullopt);

  Index rank() const { return gram_.rows(); }
  const RatMat& gram() const { return gram_; }
  const std::optional<int>& n() const { return n_; }

 private:
  RatMat gram_;
  std::optional<int> n_;
};

// Throws std::invalid_argument on a length mismatch.
Rational q_eval(const H2Lattice& l, const ClassVec& a, const ClassVec& b);

struct Signature {
  Index positive = 0;
  Index negative = 0;
};

Signature signature(const H2Lattice& l);

struct FujikiCheck {
  bool pass = true;
  std::vector<std::size_t> flagged;  // indices of classes with top(eta) != q(eta,eta)^n
};

// Compares caller-supplied top self-intersections against q(eta,eta)^n.
FujikiCheck fujiki_check(const H2Lattice& l, int n, const std::vector<ClassVec>& classes,
                         const std::function<Rational(const ClassVec&)>& top);

// Rational inner approximation of the Kähler cone by generators.
struct ConeSpec {
  std::vector<ClassVec> generators;
};

// Throws std::invalid_argument("invalid cone: ...") unless every pairing q(g_i, g_j),
// including i = j, is positive.
void validate_cone(const H2Lattice& l, const ConeSpec& cone);

enum class VanishingCase { DualClosure, MinusDualClosure, Neither };

std::string to_string(VanishingCase c);

struct VanishingReport {
  ClassVec c1;
  int n = 0;
  VanishingCase which = VanishingCase::Neither;
  std::vector<Rational> pairings;  // q(c1, g_i)

  // True iff the trichotomy predicts H^i = 0.
  bool vanishes(int i) const;
  std::vector<int> zero_set() const;  // over 0 <= i <= 2n
  std::string description() const;
};

// Throws HypothesisError if c1 = 0 and std::invalid_argument("cone not full-dimensional")
// if c1 pairs to zero with every generator.
VanishingReport classify(const H2Lattice& l, const ConeSpec& cone, const ClassVec& c1, int n);

// For a class with pairings of both signs, a point t g_i + (1 - t) g_j of the cone
// orthogonal to it; nullopt otherwise. Throws std::invalid_argument for eta = 0.
std::optional<ClassVec> primitive_witness(const H2Lattice& l, const ConeSpec& cone,
                                          const ClassVec& eta);

struct NefPerturbation {
  Rational lambda;        // q(omega, eta - eps omega)
  Rational delta;         // lambda eps / (2 q(eta, omega))
  ClassVec shifted;       // eta - eps omega
  ClassVec kahler;        // eta + delta omega
  Rational q_kahler_shifted;
  // Cone spanned by omega and eta + delta omega; classifies `shifted` as Neither.
  ConeSpec witness_cone;
};

// Throws std::invalid_argument naming the failed precondition.
NefPerturbation nef_perturbation(const H2Lattice& l, const ClassVec& eta, const ClassVec& omega,
                                 const Rational& eps);

// q'(e1, e2) = A - (2n-2)/(2n-1)^2 * B1 B2 / C with A = int w^{2n-2} e1 e2,
// B_i = int w^{2n-1} e_i and C the supplied volume term. Throws if C = 0.
struct BeauvilleData {
  int n = 1;
  Rational mixed;  // A
  Rational b1, b2;
  Rational volume;  // C
};
Rational beauville_coefficient(int n);
Rational beauville_form(const BeauvilleData& d);

// Random data for property tests. Gram = P^T diag(1,-1,...,-1) P with integer P.
struct RandomInstance {
  H2Lattice lattice;
  ConeSpec cone;
  ClassVec c1;
};
RandomInstance random_instance(std::mt19937_64& rng, int rank, int generators);

struct NullInstance {
  H2Lattice lattice;
  ConeSpec cone;
  ClassVec eta;    // q(eta, eta) = 0, q(eta, omega) > 0
  ClassVec omega;  // first cone generator
  Rational eps;    // inside (0, q(eta,omega)/q(omega,omega))
};
NullInstance random_null_instance(std::mt19937_64& rng, int rank, int generators);

}  // namespace qdc
