#pragma once

// Named catalog of operator identities on the flat model, run over a grid of
// (n, D, lambda) settings.

#include "qdc/vanishing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdc {

struct CheckInfo {
  std::string name;
  std::string description;
  bool twisted = false;     // needs a weighted bundle; run once per lambda
  bool as_printed = false;  // literal sign variant, excluded from the default set
};

const std::vector<CheckInfo>& check_catalog();
const CheckInfo& check_info(const std::string& name);  // throws std::invalid_argument

struct SuiteConfig {
  int n = 1;
  int max_degree = 2;
  std::vector<Rational> lambdas{Rational(1)};
  std::vector<std::string> checks;  // empty: every check that is not as_printed
  bool flip_dbar_J = false;         // test hook forwarded to the operator sets
};

// Throws std::invalid_argument on n outside {1,2}, D outside [0,4], lambda <= 0 or
// an unknown check name.
void validate(const SuiteConfig& cfg);

struct CheckResult {
  std::string name;
  std::string setting;  // e.g. "n=1 D=2 lambda=1/2"
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> formulas;
  std::string failed_formula;
  std::optional<Counterexample> counterexample;
  std::string note;
};

std::vector<CheckResult> run_suite(const SuiteConfig& cfg);

// Pointwise action of a matrix on the degree-p form part of w, landing in degree q.
// Matrix indices follow masks_of_degree.
PolyForm apply_pointwise(const SparseMat& a, int p, int q, const PolyForm& w);

}  // namespace qdc
