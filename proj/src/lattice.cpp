#include "qdc/lattice.hpp"

#include <algorithm>

namespace qdc {

namespace {

void require_length(const H2Lattice& l, const ClassVec& v) {
  if (v.size() != l.rank())
    throw std::invalid_argument("class has length " + std::to_string(v.size()) + ", lattice rank is " +
                                std::to_string(l.rank()));
}

bool is_zero_vec(const ClassVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational pow(const Rational& x, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

H2Lattice::H2Lattice(RatMat gram, std::optional<int> n) : gram_(std::move(gram)), n_(n) {
  if (gram_.rows() == 0 || gram_.rows() != gram_.cols())
    throw std::invalid_argument("Gram matrix must be square and nonempty");
  for (Index i = 0; i < gram_.rows(); ++i)
    for (Index j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("Gram matrix is not symmetric");
  if (inertia_dense(gram_).zero > 0) throw std::invalid_argument("Gram matrix is degenerate");
  if (n_ && *n_ < 1) throw std::invalid_argument("quaternionic dimension must be >= 1");
}

Rational q_eval(const H2Lattice& l, const ClassVec& a, const ClassVec& b) {
  require_length(l, a);
  require_length(l, b);
  Rational s = 0;
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (Index j = 0; j < b.size(); ++j)
      if (!b[j].is_zero() && !l.gram()(i, j).is_zero()) s += a[i] * l.gram()(i, j) * b[j];
  }
  return s;
}

Signature signature(const H2Lattice& l) {
  const Inertia in = inertia_dense(l.gram());
  if (in.zero > 0) throw std::invalid_argument("Gram matrix is degenerate");
  return {in.positive, in.negative};
}

FujikiCheck fujiki_check(const H2Lattice& l, int n, const std::vector<ClassVec>& classes,
                         const std::function<Rational(const ClassVec&)>& top) {
  FujikiCheck out;
  for (std::size_t k = 0; k < classes.size(); ++k)
    if (top(classes[k]) != pow(q_eval(l, classes[k], classes[k]), n)) {
      out.pass = false;
      out.flagged.push_back(k);
    }
  return out;
}

void validate_cone(const H2Lattice& l, const ConeSpec& cone) {
  if (cone.generators.empty()) throw std::invalid_argument("invalid cone: no generators");
  for (const auto& g : cone.generators) {
    if (g.size() != l.rank()) throw std::invalid_argument("invalid cone: generator length mismatch");
  }
  for (std::size_t i = 0; i < cone.generators.size(); ++i)
    for (std::size_t j = i; j < cone.generators.size(); ++j)
      if (q_eval(l, cone.generators[i], cone.generators[j]) <= 0)
        throw std::invalid_argument("invalid cone: q(g" + std::to_string(i + 1) + ", g" +
                                    std::to_string(j + 1) + ") <= 0");
}

std::string to_string(VanishingCase c) {
  switch (c) {
    case VanishingCase::DualClosure:
      return "case (i)";
    case VanishingCase::MinusDualClosure:
      return "case (ii)";
    case VanishingCase::Neither:
      return "case (iii)";
  }
  return "?";
}

bool VanishingReport::vanishes(int i) const {
  switch (which) {
    case VanishingCase::DualClosure:
      return i > n;
    case VanishingCase::MinusDualClosure:
      return i < n;
    case VanishingCase::Neither:
      return i != n;
  }
  return false;
}

std::vector<int> VanishingReport::zero_set() const {
  std::vector<int> out;
  for (int i = 0; i <= 2 * n; ++i)
    if (vanishes(i)) out.push_back(i);
  return out;
}

std::string VanishingReport::description() const {
  switch (which) {
    case VanishingCase::DualClosure:
      return "case (i): H^i = 0 for all i > n";
    case VanishingCase::MinusDualClosure:
      return "case (ii): H^i = 0 for all i < n";
    case VanishingCase::Neither:
      return "case (iii): H^i = 0 for all i != n";
  }
  return "?";
}

VanishingReport classify(const H2Lattice& l, const ConeSpec& cone, const ClassVec& c1, int n) {
  require_length(l, c1);
  if (n < 1) throw std::invalid_argument("quaternionic dimension must be >= 1");
  if (is_zero_vec(c1)) throw HypothesisError("hypothesis c1(L) != 0 violated");
  validate_cone(l, cone);
  VanishingReport r;
  r.c1 = c1;
  r.n = n;
  bool pos = false, neg = false;
  for (const auto& g : cone.generators) {
    r.pairings.push_back(q_eval(l, c1, g));
    pos = pos || r.pairings.back() > 0;
    neg = neg || r.pairings.back() < 0;
  }
  if (!pos && !neg) throw std::invalid_argument("cone not full-dimensional");
  // Boundary classes (zeros, no negatives) belong to the closed dual cone.
  r.which = !neg ? VanishingCase::DualClosure
                 : (!pos ? VanishingCase::MinusDualClosure : VanishingCase::Neither);
  return r;
}

std::optional<ClassVec> primitive_witness(const H2Lattice& l, const ConeSpec& cone,
                                          const ClassVec& eta) {
  require_length(l, eta);
  if (is_zero_vec(eta)) throw std::invalid_argument("witness requested for the zero class");
  validate_cone(l, cone);
  std::vector<Rational> s;
  for (const auto& g : cone.generators) s.push_back(q_eval(l, eta, g));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!((s[i] < 0 && s[j] > 0) || (s[i] > 0 && s[j] < 0))) continue;
      const Rational t = s[j] / (s[j] - s[i]);
      const ClassVec w = t * cone.generators[i] + (1 - t) * cone.generators[j];
      if (!q_eval(l, eta, w).is_zero() || t <= 0 || t >= 1)
        throw std::logic_error("witness construction failed");
      return w;
    }
  return std::nullopt;
}

NefPerturbation nef_perturbation(const H2Lattice& l, const ClassVec& eta, const ClassVec& omega,
                                 const Rational& eps) {
  require_length(l, eta);
  require_length(l, omega);
  if (!q_eval(l, eta, eta).is_zero()) throw std::invalid_argument("precondition q(eta, eta) = 0 fails");
  const Rational qww = q_eval(l, omega, omega);
  if (qww <= 0) throw std::invalid_argument("precondition q(omega, omega) > 0 fails");
  const Rational qew = q_eval(l, eta, omega);
  if (qew <= 0) throw std::invalid_argument("precondition q(eta, omega) > 0 fails");
  if (eps <= 0 || eps >= qew / qww)
    throw std::invalid_argument("precondition 0 < eps < q(eta, omega)/q(omega, omega) fails");
  NefPerturbation r;
  r.shifted = eta - eps * omega;
  r.lambda = q_eval(l, omega, r.shifted);
  r.delta = r.lambda * eps / (2 * qew);
  r.kahler = eta + r.delta * omega;
  r.q_kahler_shifted = q_eval(l, r.kahler, r.shifted);
  if (r.lambda <= 0 || r.q_kahler_shifted >= 0)
    throw std::logic_error("perturbation postcondition fails");
  r.witness_cone.generators = {omega, r.kahler};
  return r;
}

Rational beauville_coefficient(int n) {
  if (n < 1) throw std::invalid_argument("quaternionic dimension must be >= 1");
  const Rational d = 2 * n - 1;
  return Rational(2 * n - 2) / (d * d);
}

Rational beauville_form(const BeauvilleData& d) {
  if (d.volume.is_zero()) throw std::invalid_argument("volume term must be nonzero");
  return d.mixed - beauville_coefficient(d.n) * d.b1 * d.b2 / d.volume;
}

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct Frame {
  RatMat p;      // lattice coordinates -> Minkowski coordinates
  RatMat p_inv;  // Minkowski -> lattice
  RatMat gram;
};

Frame random_frame(std::mt19937_64& rng, int rank) {
  if (rank < 2) throw std::invalid_argument("rank must be >= 2");
  RatMat p(rank, rank);
  while (true) {
    for (Index i = 0; i < rank; ++i)
      for (Index j = 0; j < rank; ++j) p(i, j) = i == j ? uniform(rng, 1, 2) : uniform(rng, -1, 1);
    try {
      RatMat inv = inverse(p);
      RatMat eta = RatMat::Constant(rank, rank, Rational(0));
      eta(0, 0) = 1;
      for (Index i = 1; i < rank; ++i) eta(i, i) = -1;
      return {p, std::move(inv), RatMat(p.transpose() * eta * p)};
    } catch (const std::domain_error&) {
    }
  }
}

// Future timelike vector (t, u) with t > |u|_1, in lattice coordinates.
ClassVec random_kahler(std::mt19937_64& rng, const Frame& f) {
  const Index r = f.p.rows();
  ClassVec y(r);
  Rational l1 = 0;
  for (Index i = 1; i < r; ++i) {
    y[i] = Rational(uniform(rng, -4, 4), uniform(rng, 1, 3));
    l1 += y[i] < 0 ? Rational(-y[i]) : y[i];
  }
  y[0] = l1 + Rational(uniform(rng, 1, 4), uniform(rng, 1, 3));
  return f.p_inv * y;
}

ConeSpec random_cone(std::mt19937_64& rng, const Frame& f, int generators) {
  ConeSpec c;
  for (int k = 0; k < generators; ++k) c.generators.push_back(random_kahler(rng, f));
  return c;
}

}  // namespace

RandomInstance random_instance(std::mt19937_64& rng, int rank, int generators) {
  const Frame f = random_frame(rng, rank);
  ConeSpec cone = random_cone(rng, f, generators);
  ClassVec c1(rank);
  do {
    for (Index i = 0; i < rank; ++i) c1[i] = uniform(rng, -3, 3);
  } while (is_zero_vec(c1));
  return {H2Lattice(f.gram), std::move(cone), std::move(c1)};
}

NullInstance random_null_instance(std::mt19937_64& rng, int rank, int generators) {
  const Frame f = random_frame(rng, rank);
  ConeSpec cone = random_cone(rng, f, generators);
  // Rational point on the unit sphere S^{r-2} by inverse stereographic projection.
  const Index m = rank - 2;
  std::vector<Rational> w(static_cast<std::size_t>(m));
  Rational w2 = 0;
  for (auto& x : w) {
    x = Rational(uniform(rng, -5, 5), uniform(rng, 1, 4));
    w2 += x * x;
  }
  ClassVec y(rank);
  y[0] = 1;
  for (Index i = 0; i < m; ++i) y[1 + i] = 2 * w[std::size_t(i)] / (w2 + 1);
  y[rank - 1] = (w2 - 1) / (w2 + 1);
  const Rational scale = uniform(rng, 1, 3);
  NullInstance out{H2Lattice(f.gram), cone, ClassVec(scale * (f.p_inv * y)), cone.generators.front(),
                   Rational(0)};
  const Rational bound = q_eval(out.lattice, out.eta, out.omega) / q_eval(out.lattice, out.omega, out.omega);
  const int k = uniform(rng, 1, 9);
  out.eps = bound * Rational(k, 10);
  return out;
}

}  // namespace qdc
