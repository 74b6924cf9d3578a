#include <doctest.h>

#include <charconv>
#include <cmath>
#include <random>
#include <string>

#include "oracle_values.hpp"
#include "twodir/errors.hpp"
#include "twodir/expr.hpp"

using twodir::evaluate;

TEST_SUITE("expr") {

TEST_CASE("small literals and constants") {
  CHECK(evaluate("2+2") == 4.0);
  CHECK(evaluate("sqrt(4)") == 2.0);
  CHECK(evaluate("0") == 0.0);
  CHECK(evaluate("sqrt(2)/2") == doctest::Approx(0.70710678118654752).epsilon(1e-15));
  CHECK(evaluate("  ( 1 +2 ) * 3 ") == 9.0);
  CHECK(evaluate("1.5e2") == 150.0);
  CHECK(evaluate(".25") == 0.25);
}

TEST_CASE("surd examples against the high-precision oracle") {
  CHECK(std::abs(evaluate("(93-13*sqrt(31))/(640*sqrt(2))") - oracle::kSurdExample) < 1e-15);
  CHECK(std::abs(evaluate("(4-4*sqrt(7))/16") - oracle::kSurdExample2) < 1e-15);
  for (const auto& c : oracle::kExample51Coefficients) {
    INFO(c.text);
    CHECK(std::abs(evaluate(c.text) - c.value) < 1e-12);
  }
  for (const auto& c : oracle::kExample52PhiEntries) {
    INFO(c.text);
    CHECK(std::abs(evaluate(c.text) - c.value) < 1e-12);
  }
}

TEST_CASE("precedence and associativity") {
  CHECK(evaluate("1-2-3") == -4.0);
  CHECK(evaluate("8/4/2") == 1.0);
  CHECK(evaluate("-2*3") == -6.0);
  CHECK(evaluate("--2") == 2.0);
  CHECK(evaluate("2*-3") == -6.0);
  CHECK(evaluate("-sqrt(4)") == -2.0);

  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> dist(-999, 999);
  for (int i = 0; i < 200; ++i) {
    const double a = dist(rng), b = dist(rng), c = dist(rng);
    const std::string text = std::to_string(static_cast<int>(a)) + "+" + std::to_string(static_cast<int>(b)) + "*" +
                             "(" + std::to_string(static_cast<int>(c)) + ")";
    CHECK(evaluate(text) == a + b * c);
  }
}

TEST_CASE("literal round trip matches from_chars exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(0.0, 1e6);
  for (int i = 0; i < 200; ++i) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", dist(rng));
    std::string text = buf;
    if (text.find('e') != std::string::npos || text.find('.') == std::string::npos) continue;
    double expected = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), expected);
    CHECK(evaluate(text) == expected);
  }
}

TEST_CASE("parse errors carry the byte offset") {
  auto offset_of = [](const char* text) -> long {
    try {
      twodir::parse_expr(text);
    } catch (const twodir::ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("(1+2") == 4);
  CHECK(offset_of("1+") == 2);
  CHECK(offset_of("1 2") == 2);
  CHECK(offset_of("1+x") == 2);
  CHECK(offset_of("sqr(2)") == 0);
  CHECK(offset_of("sqrt 2") == 5);
  CHECK(offset_of("1e") == 2);
}

TEST_CASE("evaluation errors") {
  CHECK_THROWS_AS(evaluate("1/0"), twodir::EvalError);
  CHECK_THROWS_AS(evaluate("1/(2-2)"), twodir::EvalError);
  CHECK_THROWS_AS(evaluate("sqrt(-1)"), twodir::EvalError);
  CHECK_THROWS_AS(evaluate("1e999"), twodir::ParseError);
  CHECK(evaluate("sqrt(0)") == 0.0);
}

TEST_CASE("parser never crashes on junk") {
  std::mt19937 rng(99);
  const std::string alphabet = "0123456789+-*/().e sqrt";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 24);
  for (int i = 0; i < 5000; ++i) {
    std::string s;
    for (int n = len(rng); n > 0; --n) s += alphabet[pick(rng)];
    try {
      (void)evaluate(s);
    } catch (const twodir::ParseError& e) {
      CHECK(e.offset() <= s.size());
    } catch (const twodir::EvalError&) {
    }
  }
}

TEST_CASE("tree shape") {
  const auto e = twodir::parse_expr("1+2*3");
  CHECK(e.kind() == twodir::Expr::Kind::Add);
  CHECK(e.to_string() == "(1 + (2 * 3))");
  CHECK(twodir::parse_expr("42.5").literal_text() == "42.5");
}

}
