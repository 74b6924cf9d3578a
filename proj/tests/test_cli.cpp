#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracle_values.hpp"
#include "test_support.hpp"
#include "twodir/report.hpp"
#include "twodir_cli/cli.hpp"

namespace fs = std::filesystem;
using twodir::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "twodir_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("example then condition-e") {
  const auto m = scratch("m52.json");
  REQUIRE(call({"example", "5.2", "--emit", m.string()}).code == 0);
  const auto r = call({"condition-e", m.string()});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("satisfied=true\n", 0) == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<double> re;
  while (std::getline(lines, line))
    if (line.rfind("eigenvalue ", 0) == 0) re.push_back(std::stod(line.substr(11)));
  REQUIRE(re.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(re[i] - oracle::kEx52ConditionE[i]) < 1e-12);
}

TEST_CASE("values at level 0 for fixture 5.1") {
  const auto m = scratch("m51.json");
  REQUIRE(call({"example", "5.1", "--emit", m.string()}).code == 0);
  const auto r = call({"values", m.string(), "--levels", "0", "--function", "phi"});
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  const auto csv = twodir::read_csv(is);
  REQUIRE(csv.x.size() == 5);
  const double printed[] = {0, -0.0564, 0.7566, 0.0069, 0};
  for (int i = 0; i < 5; ++i) {
    CHECK(csv.x[i] == i);
    CHECK(std::abs(csv.values(0, i) - printed[i]) < 5e-4);
  }
}

TEST_CASE("second derivative request fails with a diagnostic") {
  const auto m = scratch("m51.json");
  REQUIRE(call({"example", "5.1", "--emit", m.string()}).code == 0);
  const auto r = call({"values", m.string(), "--derivative", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("no eigenvalue 0.25") != std::string::npos);
}

TEST_CASE("output files re-read and satisfy the table invariants") {
  const auto out = scratch("phi52.csv");
  REQUIRE(call({"values", "5.2", "--levels", "6", "--out", out.string()}).code == 0);
  std::ifstream f(out);
  const auto csv = twodir::read_csv(f);
  CHECK(csv.x.size() == 2 * 64 + 1);
  // Rebuild a table from the CSV and check partition of unity on it.
  twodir::PointValueTable t(0, 2, 2, 6, 2, twodir::FunctionKind::Phi);
  t.values() = csv.values;
  CHECK(testing_support::partition_of_unity_error(t, twodir::zeroth_moment(testing_support::ex52())) < 1e-8);
}

TEST_CASE("wavelet and derivative selectors") {
  auto r = call({"values", "5.1", "--derivative", "1", "--function", "psi:1"});
  REQUIRE(r.code == 0);
  std::istringstream is(r.out);
  const auto csv = twodir::read_csv(is);
  for (int i = 0; i < 5; ++i) CHECK(std::abs(csv.values(0, i) - oracle::kEx51Dpsi[i]) < 1e-12);

  CHECK(call({"values", "5.1", "--function", "psi:2"}).code == 2);
  CHECK(call({"values", "5.1", "--function", "chi"}).code == 2);
}

TEST_CASE("json output") {
  const auto r = call({"values", "5.2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("kind") == "phi");
  CHECK(std::abs(j.at("normalizing_constant").get<double>() - oracle::kEx52PhiConstant) < 1e-12);
  CHECK(j.at("spectrum").size() == 6);
}

TEST_CASE("moments subcommand") {
  const auto r = call({"moments", "5.1", "--order", "2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j.at("m")[1][0].get<double>() - oracle::kEx51Moments[1]) < 1e-12);
}

TEST_CASE("cascade subcommand") {
  const auto out = scratch("cascade.csv");
  const auto r = call({"cascade", "5.1", "--levels", "5", "--iterations", "60", "--tol", "1e-10", "--out",
                       out.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("iterations=") != std::string::npos);
  CHECK(r.out.find("delta=") != std::string::npos);
  CHECK(r.out.find("converged=true") != std::string::npos);
  std::ifstream f(out);
  CHECK(twodir::read_csv(f).x.size() == 4 * 32 + 1);
}

TEST_CASE("validate subcommand") {
  const auto r = call({"validate", "5.2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("support=[0, 2]") != std::string::npos);
  CHECK(r.out.find("condition_e=true") != std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"values"}).code == 2);
  CHECK(call({"values", "5.1", "--bogus"}).code == 2);
  CHECK(call({"values", "5.1", "--levels", "15"}).code == 2);
  CHECK(call({"values", "/nonexistent/mask.json"}).code == 2);
  CHECK(call({"example", "9.9"}).code == 2);
  CHECK(call({"cascade", "5.1", "--iterations", "0"}).code == 2);
  const auto bad = scratch("bad.json");
  {
    std::ofstream f(bad);
    f << R"({"name": "x", "dilation": 2, "multiplicity": 2, "phi": {"plus": {"1": [[1, 2, 3]]}, "minus": {}}})";
  }
  const auto r = call({"validate", bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find(R"(phi.plus["1"])") != std::string::npos);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
  const auto a = call({"values", "5.2", "--levels", "5", "--format", "json"});
  const auto b = call({"values", "5.2", "--levels", "5", "--format", "json"});
  CHECK(a.out == b.out);
  const auto p = scratch("det1.csv"), q = scratch("det2.csv");
  call({"values", "5.1", "--levels", "4", "-o", p.string()});
  call({"values", "5.1", "--levels", "4", "-o", q.string()});
  CHECK(slurp(p) == slurp(q));
}

}
