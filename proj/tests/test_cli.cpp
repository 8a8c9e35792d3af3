#include "qdc/cli.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <sstream>

using namespace qdc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(QDC_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("verify exit codes", "[cli]") {
  const Run ok = run({"verify", "--input", fixture("verify_default.json")});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("10 passed, 0 failed") != std::string::npos);
  CHECK(run({"verify", "--input", fixture("verify_unknown_identity.json")}).code == kExitInvalidInput);
  CHECK(run({"verify", "--check", "no-such"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--n", "3"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--lambda", "0"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--lambda", "0.5"}).code == kExitInvalidInput);
  CHECK(run({"verify", "--input", fixture("missing.json")}).code == kExitInvalidInput);
  const Run broken = run({"verify", "--input", fixture("verify_broken.json")});
  CHECK(broken.code == kExitFailure);
  CHECK(broken.out.find("reproduce: qdc verify --n 1 --degree 1 --lambda 1/2 --check twisted-kodaira "
                        "--break-convention") != std::string::npos);
  CHECK(broken.out.find("input:") != std::string::npos);
}

TEST_CASE("verify structured report", "[cli]") {
  const std::vector<std::string> args = {"verify", "--n", "1", "--degree", "1", "--lambda", "2/4",
                                         "--lambda", "3", "--json"};
  const Run a = run(args), b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["input"]["lambda"] == nlohmann::json({"1/2", "3"}));
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["results"].size() == 7 + 3 * 2);
  CHECK(a.out.find("time") == std::string::npos);
  const Run printed = run({"verify", "--degree", "1", "--check", "lefschetz-weight-as-printed", "--json"});
  CHECK(printed.code == kExitFailure);
  const auto f = nlohmann::json::parse(printed.out);
  CHECK(f["results"][0]["status"] == "fail");
  CHECK(f["results"][0].contains("counterexample"));
  CHECK(f["results"][0].contains("reproducer"));
}

TEST_CASE("classify", "[cli]") {
  const Run r3 = run({"classify", "--input", fixture("hyperbolic.json"), "--class", "1,-1"});
  CHECK(r3.code == kExitOk);
  CHECK(r3.out.find("case (iii): H^i = 0 for all i != n") != std::string::npos);
  const Run r1 = run({"classify", "--input", fixture("hyperbolic.json"), "--class", "1,0"});
  CHECK(r1.out.find("case (i):") != std::string::npos);
  const Run zero = run({"classify", "--input", fixture("hyperbolic.json"), "--class", "0,0"});
  CHECK(zero.code == kExitFailure);
  CHECK(zero.err.find("c1(L) != 0") != std::string::npos);
  const Run bad = run({"classify", "--input", fixture("invalid_cone.json"), "--class", "1,0"});
  CHECK(bad.code == kExitInvalidInput);
  CHECK(bad.err.find("invalid cone") != std::string::npos);
  CHECK(run({"classify", "--input", fixture("hyperbolic.json"), "--class", "1,x"}).code == kExitInvalidInput);
  CHECK(run({"classify", "--input", fixture("hyperbolic.json"), "--class", "1,0,0"}).code == kExitInvalidInput);
  CHECK(run({"classify", "--input", fixture("hyperbolic.json")}).code == kExitInvalidInput);
}

TEST_CASE("classify round-trips rationals", "[cli]") {
  const Run a = run({"classify", "--input", fixture("hyperbolic_flat.json"), "--json"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == run({"classify", "--input", fixture("hyperbolic_flat.json"), "--json"}).out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["input"]["class"] == nlohmann::json({"-1/2", "1/2"}));
  CHECK(j["input"]["generators"][0] == nlohmann::json({"2", "1"}));
  CHECK(j["report"]["pairings"] == nlohmann::json({"1/2", "-1/2"}));
  CHECK(j["witness"] == nlohmann::json({"3/2", "3/2"}));
}

TEST_CASE("classify random batch", "[cli]") {
  const std::vector<std::string> args = {"classify", "--random", "300", "--seed", "11", "--json"};
  const Run a = run(args);
  CHECK(a.code == kExitOk);
  CHECK(a.out == run(args).out);
  CHECK(nlohmann::json::parse(a.out)["violations"] == 0);
}

TEST_CASE("koszul exit codes", "[cli]") {
  const Run ok = run({"koszul", "--input", fixture("koszul_k1.json")});
  CHECK(ok.code == kExitOk);
  CHECK(ok.out.find("Surjective") != std::string::npos);
  CHECK(run({"koszul", "--input", fixture("koszul_k2.json")}).code == kExitOk);
  const Run low = run({"koszul", "--input", fixture("koszul_k1_below.json"), "--json"});
  CHECK(low.code == kExitBelowThreshold);
  CHECK(nlohmann::json::parse(low.out)["n0"] == "4");
  const Run na = run({"koszul", "--input", fixture("koszul_k_equals_n.json")});
  CHECK(na.code == kExitFailure);
  CHECK(na.out.find("NotApplicable") != std::string::npos);
  CHECK(run({"koszul", "--input", fixture("hyperbolic.json")}).code == kExitInvalidInput);
  CHECK(run({"koszul"}).code == kExitInvalidInput);
  const Run j = run({"koszul", "--input", fixture("koszul_k2.json"), "--json"});
  CHECK(j.out == run({"koszul", "--input", fixture("koszul_k2.json"), "--json"}).out);
  const auto rep = nlohmann::json::parse(j.out);
  CHECK(rep["grid"]["n0"] == "9");
  CHECK(rep["grid"]["columns"].size() == 5);
}

TEST_CASE("su2-decompose and usage errors", "[cli]") {
  const Run r = run({"su2-decompose", "--n", "2", "--degree", "2", "--json"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["degrees"][0]["multiplicities"]["2"] == 6);
  CHECK(j["degrees"][0]["top_weight_dim"] == 18);
  CHECK(run({"su2-decompose", "--n", "5"}).code == kExitInvalidInput);
  CHECK(run({}).code == kExitInvalidInput);
  CHECK(run({"bogus"}).code == kExitInvalidInput);
  CHECK(run({"--help"}).code == kExitOk);
  CHECK(run({"--version"}).code == kExitOk);
}
