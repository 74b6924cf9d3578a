#include <doctest.h>

#include "test_support.hpp"
#include "twodir/moments.hpp"
#include "twodir/pointvals.hpp"

using namespace twodir;
using namespace testing_support;

TEST_SUITE("properties") {

TEST_CASE("partition of unity at every level up to 6") {
  for (const auto* sys : {&ex51(), &ex52()}) {
    const Vector m0 = zeroth_moment(*sys);
    PointValueTable t = integer_values(*sys).table;
    for (int level = 0; level <= 6; ++level) {
      if (level > 0) t = refine(*sys, t);
      CHECK(partition_of_unity_error(t, m0) < 1e-8);
    }
  }
}

TEST_CASE("polynomial reproduction of 1 and x") {
  for (const auto* sys : {&ex51(), &ex52()}) {
    const auto mt = continuous_moments(*sys, 1);
    const auto t = refine_to(*sys, integer_values(*sys).table, 5);
    CHECK(polynomial_reproduction_error(t, mt, 0) < 1e-5);
    CHECK(polynomial_reproduction_error(t, mt, 1) < 1e-5);
  }
}

TEST_CASE("x^2 is not reproduced (approximation order 2)") {
  const auto mt = continuous_moments(ex52(), 2);
  const auto t = refine_to(ex52(), integer_values(ex52()).table, 5);
  CHECK(polynomial_reproduction_error(t, mt, 2) > 1e-3);
}

TEST_CASE("orthonormality quadrature on the smoother fixture") {
  const auto t = refine_to(ex51(), integer_values(ex51()).table, 8);
  CHECK(orthonormality_error(t, 0) < 5e-3);
  CHECK(orthonormality_error(t, 1) < 5e-3);
  for (int j : {0, 1})
    for (int k : {0, 1}) CHECK(mixed_orthogonality_error(t, j, k) < 5e-3);
}

TEST_CASE("orthonormality error halves with the grid spacing on fixture 5.2") {
  // phi has jumps, so grid sums converge at first order.
  const auto t8 = refine_to(ex52(), integer_values(ex52()).table, 8);
  const auto t10 = refine_to(ex52(), t8, 10);
  const double e8 = orthonormality_error(t8, 0);
  const double e10 = orthonormality_error(t10, 0);
  CHECK(e10 < 0.3 * e8);
  CHECK(e10 < 5e-3);
}

}
