#pragma once

#include "qdc/koszul.hpp"
#include "qdc/suite.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qdc::io {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

// Malformed or invalid input; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json load_file(const std::string& path);

// Rationals are JSON strings ("-3/4") or integers; floats are rejected.
Rational rational_from_json(const json& j, const std::string& where);
json to_json(const Rational& q);
ClassVec vector_from_json(const json& j, const std::string& where);
json to_json(const ClassVec& v);
// Comma-separated rationals, as given on the command line.
ClassVec vector_from_string(const std::string& s, const std::string& where);

// {"rank": r, "gram": [[...], ...] or row-major flat list, "n": optional}
H2Lattice lattice_from_json(const json& j);
json to_json(const H2Lattice& l);
// {"generators": [[...], ...]}, validated against the lattice.
ConeSpec cone_from_json(const json& j, const H2Lattice& l);
json to_json(const ConeSpec& c);

// Lattice and cone fields plus "l", "h", "N", "n".
DivisorConfig divisor_config_from_json(const json& j);

json to_json(const CheckResult& r);
json to_json(const VanishingReport& r);
json to_json(const SpectralGrid& g);

}  // namespace qdc::io
