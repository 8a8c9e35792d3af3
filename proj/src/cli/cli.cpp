#include "qdc/cli.hpp"

#include "json_io.hpp"
#include "qdc/qforms.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <random>

namespace qdc {

namespace {

using io::InputError;
using io::json;

json header(const std::string& command) {
  return {{"schema_version", io::kSchemaVersion}, {"tool", "qdc"}, {"version", QDC_VERSION},
          {"command", command}};
}

void require_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  if (!j.is_object()) throw InputError(what + ": expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) ==
        allowed.end())
      throw InputError(what + ": unknown key \"" + key + "\"");
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string input;
  std::optional<int> n, degree;
  std::vector<std::string> lambdas, checks;
  bool json_out = false;
  bool break_convention = false;
};

SuiteConfig suite_config(const VerifyArgs& a) {
  SuiteConfig cfg;
  if (!a.input.empty()) {
    const json j = io::load_file(a.input);
    require_keys(j, {"n", "degree", "lambda", "identities", "break_convention"}, a.input);
    if (j.contains("n")) {
      if (!j["n"].is_number_integer()) throw InputError("n: expected an integer");
      cfg.n = j["n"].get<int>();
    }
    if (j.contains("degree")) {
      if (!j["degree"].is_number_integer()) throw InputError("degree: expected an integer");
      cfg.max_degree = j["degree"].get<int>();
    }
    if (j.contains("lambda")) {
      cfg.lambdas.clear();
      if (j["lambda"].is_array())
        for (std::size_t k = 0; k < j["lambda"].size(); ++k)
          cfg.lambdas.push_back(io::rational_from_json(j["lambda"][k], "lambda[" + std::to_string(k) + "]"));
      else
        cfg.lambdas.push_back(io::rational_from_json(j["lambda"], "lambda"));
    }
    if (j.contains("identities")) {
      if (!j["identities"].is_array()) throw InputError("identities: expected an array of names");
      for (const auto& x : j["identities"]) {
        if (!x.is_string()) throw InputError("identities: expected strings");
        cfg.checks.push_back(x.get<std::string>());
      }
    }
    if (j.contains("break_convention")) {
      if (!j["break_convention"].is_boolean()) throw InputError("break_convention: expected a boolean");
      cfg.flip_dbar_J = j["break_convention"].get<bool>();
    }
  }
  if (a.n) cfg.n = *a.n;
  if (a.degree) cfg.max_degree = *a.degree;
  if (!a.lambdas.empty()) {
    cfg.lambdas.clear();
    for (const auto& s : a.lambdas) cfg.lambdas.push_back(io::rational_from_json(s, "--lambda"));
  }
  if (!a.checks.empty()) cfg.checks = a.checks;
  cfg.flip_dbar_J = cfg.flip_dbar_J || a.break_convention;
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return cfg;
}

std::string reproducer(const SuiteConfig& cfg, const CheckResult& r) {
  std::string s = "qdc verify --n " + std::to_string(cfg.n) + " --degree " + std::to_string(cfg.max_degree);
  const auto pos = r.setting.find("lambda=");
  if (pos != std::string::npos) s += " --lambda " + r.setting.substr(pos + 7);
  s += " --check " + r.name;
  if (cfg.flip_dbar_J) s += " --break-convention";
  return s;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const SuiteConfig cfg = suite_config(a);
  const auto results = run_suite(cfg);
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.pass; });
  if (a.json_out) {
    json rep = header("verify");
    json lambdas = json::array();
    for (const auto& l : cfg.lambdas) lambdas.push_back(io::to_json(l));
    rep["input"] = {{"n", cfg.n}, {"degree", cfg.max_degree}, {"lambda", lambdas},
                    {"identities", cfg.checks}, {"break_convention", cfg.flip_dbar_J}};
    json rs = json::array();
    for (const auto& r : results) {
      json jr = io::to_json(r);
      if (!r.pass) jr["reproducer"] = reproducer(cfg, r);
      rs.push_back(jr);
    }
    rep["results"] = rs;
    rep["summary"] = {{"passed", results.size() - std::size_t(failed)}, {"failed", failed}};
    out << rep.dump(2) << '\n';
  } else {
    std::size_t w = 0;
    for (const auto& r : results) w = std::max(w, r.name.size());
    for (const auto& r : results) {
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(int(w) + 2) << r.name << r.setting
          << "  (" << r.checked << " forms)";
      if (!r.note.empty()) out << "  " << r.note;
      out << '\n';
      if (!r.pass) {
        out << "      formula: " << r.failed_formula << '\n';
        if (r.counterexample) {
          out << "      input:   " << to_string(r.counterexample->input) << '\n';
          out << "      lhs:     " << to_string(r.counterexample->lhs) << '\n';
          out << "      rhs:     " << to_string(r.counterexample->rhs) << '\n';
        }
        out << "      reproduce: " << reproducer(cfg, r) << '\n';
      }
    }
    out << results.size() - std::size_t(failed) << " passed, " << failed << " failed\n";
  }
  return failed ? kExitFailure : kExitOk;
}

// ---- classify --------------------------------------------------------------

struct ClassifyArgs {
  std::string input;
  std::string cls;
  std::optional<int> n;
  bool json_out = false;
  int random = 0;
  std::uint64_t seed = 1;
  int rank = 4;
};

int classify_random(const ClassifyArgs& a, std::ostream& out) {
  if (a.rank < 2 || a.rank > 24) throw InputError("--rank must be in [2, 24]");
  std::mt19937_64 rng(a.seed);
  int counts[3] = {0, 0, 0};
  int degenerate = 0, violations = 0;
  for (int t = 0; t < a.random; ++t) {
    const RandomInstance ri = random_instance(rng, a.rank, 1 + t % 4);
    VanishingReport r;
    try {
      r = classify(ri.lattice, ri.cone, ri.c1, 2);
    } catch (const std::invalid_argument&) {
      ++degenerate;
      continue;
    }
    ++counts[int(r.which)];
    const VanishingCase mirror = classify(ri.lattice, ri.cone, ClassVec(-ri.c1), 2).which;
    const bool mirror_ok = r.which == VanishingCase::Neither ? mirror == VanishingCase::Neither
                                                             : int(mirror) == 1 - int(r.which);
    const auto w = primitive_witness(ri.lattice, ri.cone, ri.c1);
    const bool witness_ok = bool(w) == (r.which == VanishingCase::Neither) &&
                            (!w || q_eval(ri.lattice, ri.c1, *w).is_zero());
    if (!mirror_ok || !witness_ok) ++violations;
  }
  if (a.json_out) {
    json rep = header("classify");
    rep["input"] = {{"random", a.random}, {"seed", a.seed}, {"rank", a.rank}};
    rep["counts"] = {{"case (i)", counts[0]}, {"case (ii)", counts[1]}, {"case (iii)", counts[2]},
                     {"not full-dimensional", degenerate}};
    rep["violations"] = violations;
    out << rep.dump(2) << '\n';
  } else {
    out << "random batch: " << a.random << " instances, rank " << a.rank << ", seed " << a.seed << '\n'
        << "case (i): " << counts[0] << ", case (ii): " << counts[1] << ", case (iii): " << counts[2]
        << ", not full-dimensional: " << degenerate << '\n'
        << "property violations: " << violations << '\n';
  }
  return violations ? kExitFailure : kExitOk;
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  if (a.random > 0) return classify_random(a, out);
  if (a.input.empty()) throw InputError("classify needs --input (or --random)");
  const json j = io::load_file(a.input);
  require_keys(j, {"rank", "gram", "generators", "n", "class"}, a.input);
  const H2Lattice lat = io::lattice_from_json(j);
  const ConeSpec cone = io::cone_from_json(j, lat);
  ClassVec c1;
  if (!a.cls.empty())
    c1 = io::vector_from_string(a.cls, "--class");
  else if (j.contains("class"))
    c1 = io::vector_from_json(j["class"], "class");
  else
    throw InputError("no class given (use --class or a \"class\" entry)");
  const int n = a.n.value_or(lat.n().value_or(1));
  VanishingReport r;
  try {
    r = classify(lat, cone, c1, n);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const std::optional<ClassVec> w = primitive_witness(lat, cone, c1);
  if (a.json_out) {
    json rep = header("classify");
    json in = io::to_json(lat);
    in["generators"] = io::to_json(cone);
    in["class"] = io::to_json(c1);
    in["n"] = n;
    rep["input"] = in;
    rep["report"] = io::to_json(r);
    rep["witness"] = w ? io::to_json(*w) : json(nullptr);
    out << rep.dump(2) << '\n';
  } else {
    out << r.description() << '\n';
    out << "pairings q(c1, g_i):";
    for (const auto& s : r.pairings) out << ' ' << to_string(s);
    out << "\nzero set (0 <= i <= " << 2 * n << "):";
    for (int i : r.zero_set()) out << ' ' << i;
    out << '\n';
    if (w) {
      out << "primitive witness in the cone:";
      for (const auto& x : *w) out << ' ' << to_string(x);
      out << '\n';
    }
  }
  return kExitOk;
}

// ---- koszul ----------------------------------------------------------------

struct KoszulArgs {
  std::string input;
  bool json_out = false;
};

int cmd_koszul(const KoszulArgs& a, std::ostream& out) {
  const json j = io::load_file(a.input);
  require_keys(j, {"rank", "gram", "generators", "n", "l", "h", "N"}, a.input);
  const DivisorConfig cfg = io::divisor_config_from_json(j);
  json rep = header("koszul");
  json in = io::to_json(cfg.lattice);
  in["generators"] = io::to_json(cfg.cone);
  in["l"] = io::to_json(cfg.l);
  in["h"] = json::array();
  for (const auto& h : cfg.h) in["h"].push_back(io::to_json(h));
  in["N"] = cfg.N;
  in["n"] = cfg.n;
  rep["input"] = in;
  try {
    const SurjectivityReport r = surjectivity_verdict(cfg);
    if (a.json_out) {
      rep["verdict"] = to_string(r.verdict);
      rep["explanation"] = r.explanation;
      rep["trace"] = r.trace;
      rep["qualifier"] = r.qualifier;
      rep["grid"] = r.grid ? io::to_json(*r.grid) : json(nullptr);
      out << rep.dump(2) << '\n';
    } else {
      if (r.grid) out << "N0 = " << to_string(r.grid->n0) << ", N = " << cfg.N << "\n" << r.grid->render();
      out << "verdict: " << to_string(r.verdict) << " (" << r.explanation << ")\n";
      for (const auto& t : r.trace) out << "  " << t << '\n';
      out << "note: " << r.qualifier << '\n';
    }
    return r.verdict == Verdict::Surjective ? kExitOk : kExitFailure;
  } catch (const BelowThreshold& e) {
    if (a.json_out) {
      rep["verdict"] = "BelowThreshold";
      rep["error"] = e.what();
      rep["n0"] = io::to_json(n0_threshold(cfg.lattice, cfg.l, cfg.h));
      out << rep.dump(2) << '\n';
    } else {
      out << e.what() << '\n';
    }
    return kExitBelowThreshold;
  }
}

// ---- su2-decompose ---------------------------------------------------------

struct Su2Args {
  int n = 1;
  std::optional<int> degree;
  bool json_out = false;
};

int cmd_su2(const Su2Args& a, std::ostream& out) {
  if (a.n != 1 && a.n != 2) throw InputError("n must be 1 or 2");
  const FlatModel m(a.n);
  std::vector<int> degrees;
  if (a.degree) {
    if (*a.degree < 0 || *a.degree > m.real_dim()) throw InputError("degree out of range");
    degrees.push_back(*a.degree);
  } else {
    for (int i = 0; i <= m.real_dim(); ++i) degrees.push_back(i);
  }
  json rep = header("su2-decompose");
  rep["input"] = {{"n", a.n}, {"degrees", degrees}};
  json ds = json::array();
  for (int i : degrees) {
    const WeightDecomposition d = weight_decompose(su2_on_forms(m, i));
    json mult = json::object();
    for (const auto& [k, c] : d.multiplicity) mult[std::to_string(k)] = c;
    const int top = d.multiplicity.count(i) ? d.multiplicity.at(i) : 0;
    ds.push_back({{"degree", i}, {"dim", d.dim}, {"max_weight", d.max_weight()}, {"multiplicities", mult},
                  {"top_weight_dim", top * (i + 1)}});
    if (!a.json_out) {
      out << "degree " << i << ": dim " << d.dim << ", weights";
      for (auto it = d.multiplicity.rbegin(); it != d.multiplicity.rend(); ++it)
        out << ' ' << it->first << "^" << it->second;
      out << ", dim of the top-weight part " << top * (i + 1) << '\n';
    }
  }
  rep["degrees"] = ds;
  if (a.json_out) out << rep.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for quaternionic Dolbeault calculus, BBF cones and Koszul vanishing"};
  app.set_version_flag("--version", std::string(QDC_VERSION));
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the operator identity suite on the flat model");
  verify->add_option("--input", va.input, "JSON config {n, degree, lambda, identities}");
  verify->add_option("--n", va.n, "Quaternionic dimension (1 or 2)");
  verify->add_option("--degree", va.degree, "Coefficient degree bound D (0..4)");
  verify->add_option("--lambda", va.lambdas, "Weight scale, rational (repeatable)");
  verify->add_option("--check", va.checks, "Identity name (repeatable; default: all)");
  verify->add_flag("--json", va.json_out, "Structured output");
  verify->add_flag("--break-convention", va.break_convention, "Test hook: replace dbar_J by -dbar_J");

  ClassifyArgs ca;
  auto* cls = app.add_subcommand("classify", "Vanishing trichotomy for a class against a Kähler cone");
  cls->add_option("--input", ca.input, "JSON lattice {rank, gram, generators, n, class}");
  cls->add_option("--class", ca.cls, "Class as comma-separated rationals");
  cls->add_option("--n", ca.n, "Quaternionic dimension");
  cls->add_flag("--json", ca.json_out, "Structured output");
  cls->add_option("--random", ca.random, "Run a randomized property batch of this size");
  cls->add_option("--seed", ca.seed, "Seed for --random");
  cls->add_option("--rank", ca.rank, "Lattice rank for --random");

  KoszulArgs ka;
  auto* kos = app.add_subcommand("koszul", "Koszul grid and surjectivity verdict");
  kos->add_option("--input", ka.input, "JSON config {gram, generators, l, h, N, n}")->required();
  kos->add_flag("--json", ka.json_out, "Structured output");

  Su2Args sa;
  auto* su2 = app.add_subcommand("su2-decompose", "Weight decomposition of the forms on H^n");
  su2->add_option("--n", sa.n, "Quaternionic dimension (1 or 2)");
  su2->add_option("--degree", sa.degree, "Single form degree (default: all)");
  su2->add_flag("--json", sa.json_out, "Structured output");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  try {
    if (verify->parsed()) return cmd_verify(va, out);
    if (cls->parsed()) return cmd_classify(ca, out);
    if (kos->parsed()) return cmd_koszul(ka, out);
    if (su2->parsed()) return cmd_su2(sa, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInvalidInput;
}

}  // namespace qdc
