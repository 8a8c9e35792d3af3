#include "json_io.hpp"

#include <fstream>
#include <sstream>

namespace qdc::io {

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational string or an integer");
}

json to_json(const Rational& q) { return qdc::to_string(q); }

ClassVec vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  ClassVec v(Index(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k)
    v[Index(k)] = rational_from_json(j[k], where + "[" + std::to_string(k) + "]");
  return v;
}

json to_json(const ClassVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

ClassVec vector_from_string(const std::string& s, const std::string& where) {
  std::vector<Rational> xs;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      xs.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (xs.empty()) throw InputError(where + ": empty vector");
  ClassVec v(Index(xs.size()));
  for (std::size_t k = 0; k < xs.size(); ++k) v[Index(k)] = xs[k];
  return v;
}

H2Lattice lattice_from_json(const json& j) {
  if (!j.is_object()) throw InputError("lattice: expected an object");
  if (!j.contains("gram")) throw InputError("lattice: missing \"gram\"");
  const json& g = j["gram"];
  if (!g.is_array() || g.empty()) throw InputError("gram: expected a nonempty array");
  Index r = 0;
  if (j.contains("rank")) {
    if (!j["rank"].is_number_integer() || j["rank"].get<long long>() < 1)
      throw InputError("rank: expected a positive integer");
    r = Index(j["rank"].get<long long>());
  }
  RatMat m;
  if (g[0].is_array()) {
    if (r == 0) r = Index(g.size());
    if (Index(g.size()) != r) throw InputError("gram: expected " + std::to_string(r) + " rows");
    m.resize(r, r);
    for (Index i = 0; i < r; ++i) {
      const ClassVec row = vector_from_json(g[std::size_t(i)], "gram[" + std::to_string(i) + "]");
      if (row.size() != r) throw InputError("gram: row " + std::to_string(i) + " has wrong length");
      m.row(i) = row.transpose();
    }
  } else {
    if (r == 0) throw InputError("gram: a flat list needs \"rank\"");
    if (Index(g.size()) != r * r) throw InputError("gram: expected rank^2 entries");
    m.resize(r, r);
    const ClassVec flat = vector_from_json(g, "gram");
    for (Index k = 0; k < r * r; ++k) m(k / r, k % r) = flat[k];
  }
  std::optional<int> n;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw InputError("n: expected an integer");
    n = j["n"].get<int>();
  }
  try {
    return H2Lattice(std::move(m), n);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("lattice: ") + e.what());
  }
}

json to_json(const H2Lattice& l) {
  json gram = json::array();
  for (Index i = 0; i < l.rank(); ++i) gram.push_back(to_json(ClassVec(l.gram().row(i).transpose())));
  json out = {{"rank", l.rank()}, {"gram", gram}};
  if (l.n()) out["n"] = *l.n();
  return out;
}

ConeSpec cone_from_json(const json& j, const H2Lattice& l) {
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InputError("cone: missing \"generators\" array");
  ConeSpec c;
  for (std::size_t k = 0; k < j["generators"].size(); ++k) {
    c.generators.push_back(
        vector_from_json(j["generators"][k], "generators[" + std::to_string(k) + "]"));
  }
  try {
    validate_cone(l, c);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return c;
}

json to_json(const ConeSpec& c) {
  json out = json::array();
  for (const auto& g : c.generators) out.push_back(to_json(g));
  return out;
}

DivisorConfig divisor_config_from_json(const json& j) {
  const H2Lattice lat = lattice_from_json(j);
  ConeSpec cone = cone_from_json(j, lat);
  if (!j.contains("l")) throw InputError("missing \"l\"");
  ClassVec l = vector_from_json(j["l"], "l");
  std::vector<ClassVec> h;
  if (j.contains("h")) {
    if (!j["h"].is_array()) throw InputError("h: expected an array of classes");
    for (std::size_t k = 0; k < j["h"].size(); ++k)
      h.push_back(vector_from_json(j["h"][k], "h[" + std::to_string(k) + "]"));
  }
  if (!j.contains("N") || !j["N"].is_number_integer()) throw InputError("N: expected an integer");
  int n = lat.n().value_or(0);
  if (j.contains("n") && j["n"].is_number_integer()) n = j["n"].get<int>();
  if (n < 1) throw InputError("n: expected a positive integer");
  DivisorConfig cfg{lat, std::move(cone), std::move(l), std::move(h), j["N"].get<long>(), n};
  try {
    if (cfg.l.size() != lat.rank()) throw std::invalid_argument("l has wrong length");
    for (const auto& x : cfg.h)
      if (x.size() != lat.rank()) throw std::invalid_argument("h class has wrong length");
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return cfg;
}

json to_json(const CheckResult& r) {
  json out = {{"name", r.name},
              {"setting", r.setting},
              {"status", r.pass ? "pass" : "fail"},
              {"checked", r.checked},
              {"formulas", r.formulas}};
  if (!r.note.empty()) out["note"] = r.note;
  if (!r.pass) {
    out["failed_formula"] = r.failed_formula;
    if (r.counterexample)
      out["counterexample"] = {{"input", qdc::to_string(r.counterexample->input)},
                               {"lhs", qdc::to_string(r.counterexample->lhs)},
                               {"rhs", qdc::to_string(r.counterexample->rhs)}};
  }
  return out;
}

json to_json(const VanishingReport& r) {
  json pairings = json::array();
  for (const auto& s : r.pairings) pairings.push_back(to_json(s));
  return {{"class", to_json(r.c1)},
          {"n", r.n},
          {"case", qdc::to_string(r.which)},
          {"description", r.description()},
          {"pairings", pairings},
          {"zero_set", r.zero_set()}};
}

json to_json(const SpectralGrid& g) {
  json cols = json::array();
  for (const auto& c : g.columns) {
    json cells = json::array();
    for (Cell x : c.cells)
      cells.push_back(x == Cell::Zero ? "zero" : (x == Cell::Input ? "input" : "possibly_nonzero"));
    json col = {{"label", c.label}, {"subset", c.subset}, {"cells", cells}, {"justification", c.justification}};
    if (c.report) col["case"] = qdc::to_string(c.report->which);
    cols.push_back(col);
  }
  return {{"n", g.n}, {"n0", to_json(g.n0)}, {"rows", "0..n"}, {"columns", cols}};
}

}  // namespace qdc::io
