#include <doctest.h>

#include <chrono>
#include <cmath>
#include <limits>

#include "test_support.hpp"
#include "twodir/cascade.hpp"
#include "twodir/errors.hpp"
#include "twodir/pointvals.hpp"

using namespace twodir;
using testing_support::ex51;
using testing_support::ex52;
using testing_support::flat;
using testing_support::max_diff;

TEST_SUITE("cascade") {

TEST_CASE("initial state") {
  const auto hat = parse_system(testing_support::kHatTwoDirection);
  const auto s = cascade_init(hat, 3);
  CHECK(s.iteration == 0);
  CHECK(s.table.at_numerator(0)(0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK(s.table.at_numerator(8)(0) == 0.0);
  CHECK(s.table.at_numerator(-8)(0) == 0.0);
  CHECK(s.table.at_numerator(4)(0) == doctest::Approx(0.5 * std::sqrt(0.5)));

  const auto s2 = cascade_init(ex52(), 2);
  // m_0 = (sqrt2/2) e_1, so both components get hat / (2 * sqrt2/2).
  CHECK(s2.table.at_numerator(0)(0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(s2.table.at_numerator(0)(1) == doctest::Approx(std::sqrt(0.5)));

  CHECK_THROWS_AS(cascade_init(ex51(), 0), DomainError);
}

TEST_CASE("linearity and grid stability") {
  auto s = cascade_init(ex52(), 4);
  s = cascade_step(ex52(), s);
  // Powers of two scale without rounding, so equality is exact.
  const auto a = cascade_step(ex52(), s);
  for (double alpha : {2.0, 0.5, -4.0}) {
    CascadeState scaled = s;
    scaled.table.values() *= alpha;
    CHECK(cascade_step(ex52(), scaled).table.values() == alpha * a.table.values());
  }
  CHECK(a.table.a() == s.table.a());
  CHECK(a.table.size() == s.table.size());
  CHECK(a.iteration == s.iteration + 1);

  CascadeState zero = s;
  zero.table.values().setZero();
  CHECK(cascade_step(ex52(), zero).table.values().isZero(0.0));
}

TEST_CASE("run stopping rules") {
  const auto once = cascade_run(ex51(), 3, 50, std::numeric_limits<double>::infinity());
  CHECK(once.iteration == 1);
  CHECK(once.converged);
  CHECK_THROWS_AS(cascade_run(ex51(), 3, 0, 1e-10), DomainError);
  const auto capped = cascade_run(ex51(), 3, 2, 0.0);
  CHECK(capped.iteration == 2);
  CHECK_FALSE(capped.converged);
  CHECK(capped.delta >= 0.0);
}

TEST_CASE("cascade agrees with the eigenvalue approach") {
  for (const auto* sys : {&ex51(), &ex52()}) {
    const auto start = std::chrono::steady_clock::now();
    const auto state = cascade_run(*sys, 5, kDefaultCascadeIterations, kDefaultCascadeTol);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(state.converged);
    CHECK(seconds < 5.0);
    const auto eig = refine_to(*sys, integer_values(*sys).table, 5);
    CHECK(max_diff(flat(state.table.values()), flat(eig.values())) < 1e-4);
  }
}

TEST_CASE("deltas eventually decrease") {
  for (const auto* sys : {&ex51(), &ex52()}) {
    auto s = cascade_init(*sys, 5);
    std::vector<double> deltas;
    for (int i = 0; i < 30; ++i) {
      s = cascade_step(*sys, s);
      deltas.push_back(s.delta);
    }
    // Monotone from some point on, until the change hits roundoff.
    for (std::size_t i = 10; i + 1 < deltas.size() && deltas[i + 1] > 1e-13; ++i) CHECK(deltas[i + 1] <= deltas[i]);
  }
}

TEST_CASE("off-grid samples interpolate linearly") {
  auto s = cascade_init(parse_system(testing_support::kHatTwoDirection), 1);
  // level-1 grid on [-1, 1]; the hat is linear between grid points.
  const Vector v = s.table.sample(1, 2);  // x = 1/4
  CHECK(v(0) == doctest::Approx(0.75 * std::sqrt(0.5)));
  const Vector w = s.table.sample(-3, 2);  // x = -3/4
  CHECK(w(0) == doctest::Approx(0.25 * std::sqrt(0.5)));
  CHECK(s.table.sample(7, 2)(0) == 0.0);
}

}
