#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "test_support.hpp"
#include "twodir/errors.hpp"
#include "twodir/pointvals.hpp"
#include "twodir/report.hpp"

using namespace twodir;
using testing_support::ex52;

TEST_SUITE("report") {

TEST_CASE("number formatting") {
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(-0.0) == "0");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(std::strtod(format_double(-1.5e-20).c_str(), nullptr) == -1.5e-20);
}

TEST_CASE("csv round trip is exact") {
  const auto t = refine_to(ex52(), integer_values(ex52()).table, 3);
  std::stringstream ss;
  write_csv(ss, t);
  const std::string text = ss.str();
  CHECK(text.rfind("x,f_1,f_2\n0,0,0\n", 0) == 0);
  const auto back = read_csv(ss);
  REQUIRE(back.x.size() == static_cast<std::size_t>(t.size()));
  for (std::int64_t i = 0; i < t.size(); ++i) CHECK(back.x[i] == t.x(i));
  CHECK(back.values == t.values());
  for (std::size_t i = 1; i < back.x.size(); ++i) CHECK(back.x[i] > back.x[i - 1]);
}

TEST_CASE("csv reader rejects malformed input") {
  auto bad = [](const char* text) {
    std::istringstream is(text);
    CHECK_THROWS_AS(read_csv(is), InputError);
  };
  bad("");
  bad("y,f_1\n0,1\n");
  bad("x,f_2\n0,1\n");
  bad("x,f_1\n0,1,2\n");
  bad("x,f_1\n0,abc\n");
}

TEST_CASE("table json") {
  const auto res = integer_values(ex52());
  std::stringstream ss;
  TableJsonExtras extras;
  extras.report = &res.report;
  write_table_json(ss, res.table, extras);
  const auto j = nlohmann::json::parse(ss.str());
  CHECK(j.at("kind") == "phi");
  CHECK(j.at("level") == 0);
  CHECK(j.at("grid").size() == 3);
  CHECK(j.at("values").size() == 3);
  CHECK(j.at("values")[1].size() == 2);
  CHECK(j.at("values")[1][1].get<double>() == res.table.values()(1, 1));
  CHECK(j.at("spectrum").size() == 6);
  CHECK(j.at("spectrum")[0].at("re").get<double>() == doctest::Approx(1.0));
  CHECK(j.at("normalizing_constant").get<double>() == res.report.normalizing_constant);

  std::stringstream bare;
  write_table_json(bare, res.table);
  const auto k = nlohmann::json::parse(bare.str());
  CHECK(k.at("normalizing_constant").is_null());
  CHECK(k.at("spectrum").empty());
}

TEST_CASE("moments json") {
  const auto mt = continuous_moments(ex52(), 2);
  std::stringstream ss;
  write_moments_json(ss, mt, 2);
  const auto j = nlohmann::json::parse(ss.str());
  CHECK(j.at("order") == 2);
  CHECK(j.at("m").size() == 3);
  CHECK(j.at("m")[2][1].get<double>() == mt.m[2](1));
}

TEST_CASE("condition e text") {
  std::stringstream ss;
  write_condition_e(ss, condition_e(ex52()));
  const std::string s = ss.str();
  CHECK(s.rfind("satisfied=true\n", 0) == 0);
  std::size_t lines = 0;
  for (std::size_t pos = s.find("eigenvalue "); pos != std::string::npos; pos = s.find("eigenvalue ", pos + 1)) ++lines;
  CHECK(lines == 4);
}

}
