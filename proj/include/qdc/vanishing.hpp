#pragma once

// Curvature term, Laplacian kernels and the positivity certificate.

#include "qdc/identity.hpp"

#include <vector>

namespace qdc {

struct ThetaPlus {
  bool is_multiple = false;  // {dbar, dbar_J} = lambda' L_Omegabar on the checked basis
  Rational lambda_prime;
  PolyForm form;             // {dbar, dbar_J} applied to the constant function 1
  std::size_t checked = 0;
};

// Computes {dbar, dbar_J} on (0,*)-forms with coefficients of degree <= D.
ThetaPlus theta_plus(const OperatorSet& ops, int max_degree);

// Expressions for the Laplacians of a twisted operator set.
Expr laplacian_dbar(const OperatorSet& ops);
Expr laplacian_dbar_J(const OperatorSet& ops);

struct LaplacianKernel {
  int degree = 0;
  int max_degree = 0;
  std::vector<PolyForm> basis;
  Index dim() const { return Index(basis.size()); }
};

// Kernel of the dbar-Laplacian on (0,i)-forms with coefficients of degree <= D.
// Needs adjoints exact up to degree D.
LaplacianKernel laplacian_kernel(const OperatorSet& ops, int degree, int max_degree);

struct PositivityReport {
  int degree = 0;
  int max_degree = 0;
  Rational lambda_prime;
  Rational shift;              // lambda' (i - n)
  bool identity_holds = false; // Delta_dbar - Delta_dbar_J = shift on the truncation
  bool psd_certified = false;  // Delta_dbar_J is positive semidefinite (exact inertia)
  Inertia inertia;             // of the Hermitian form <Delta_dbar_J u, v>
  bool kernel_forced_empty = false;
};

// Needs adjoints exact up to degree D + 1.
PositivityReport positivity_report(const OperatorSet& ops, int degree, int max_degree);

}  // namespace qdc
