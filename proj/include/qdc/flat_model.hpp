#pragma once

// Flat hyperkähler model H^n with real coordinates x^c_a, c = 0..3, a = 1..n.

#include "qdc/exterior.hpp"

#include <array>

namespace qdc {

enum class Structure { I, J, K };

class FlatModel {
 public:
  // Supported range 1 <= n <= 2 (coframe masks and monomials use 8 slots).
  explicit FlatModel(int n);

  int n() const { return n_; }
  int real_dim() const { return 4 * n_; }
  int complex_dim() const { return 2 * n_; }

  // Real coordinate index of x^c_a, a counted from 1.
  static int coordinate(int a, int c) { return 4 * (a - 1) + c; }

  // Action on 1-forms: column k is the image of dx^k.
  const DenseMat& structure(Structure s) const { return mat_[idx(s)]; }
  // Extension of L as an algebra automorphism of the exterior algebra.
  const ExtendedMap& automorphism(Structure s) const { return aut_[idx(s)]; }
  const ExtendedMap& inverse_automorphism(Structure s) const { return inv_[idx(s)]; }
  // Extension of L as a derivation.
  const ExtendedMap& derivation(Structure s) const { return der_[idx(s)]; }

  ExteriorForm omega(Structure s) const;
  ExteriorForm Omega() const;      // omega_J + i omega_K, of type (2,0)
  ExteriorForm Omega_bar() const;  // omega_J - i omega_K

  // Complex coframe, j = 0..2n-1, z_j = x_{2j} + i x_{2j+1}.
  ExteriorForm dz(int j) const;
  ExteriorForm dzbar(int j) const;
  // dzbar_{j1} ^ ... for the bits j of k, ascending.
  ExteriorForm dzbar_wedge(Mask k) const;

  // Hermitian pairing on forms induced by g/2, so dz and dzbar are unit vectors.
  GaussRat hermitian(const ExteriorForm& a, const ExteriorForm& b) const;
  static Rational metric_weight(Mask m);  // 2^-|m|

  // Coefficient extraction for (0,p)-forms: for a real mask with at most one bit
  // per coordinate pair, the dzbar index set it belongs to and the factor that
  // turns its coefficient into a contribution to <w, dzbar_K>.
  struct AntiholomorphicSlot {
    bool valid = false;
    Mask k = 0;
    GaussRat factor;
  };
  const AntiholomorphicSlot& antiholomorphic_slot(Mask real_mask) const { return slot_[real_mask]; }

 private:
  static int idx(Structure s) { return static_cast<int>(s); }

  int n_;
  std::array<DenseMat, 3> mat_;
  std::vector<ExtendedMap> aut_, inv_, der_;
  std::vector<AntiholomorphicSlot> slot_;
};

}  // namespace qdc
