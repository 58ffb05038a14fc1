#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "splitperm/exact.hpp"
#include "splitperm/identities.hpp"

using namespace splitperm;

TEST_CASE("Vandermonde cells") {
  for (long r = 0; r <= 10; ++r) {
    for (long s = 0; s <= 10; ++s) {
      Integer sum = 0;
      for (long m = 0; m <= std::min(r, s); ++m) sum += binomial(r, m) * binomial(s, s - m);
      CHECK(sum == binomial(r + s, s));
    }
  }
}

TEST_CASE("product identity at low order by hand") {
  // (1,1): C(2,1)/(1! 1!) = 2 on the left; e^{x+y} gives 1, I0 gives 1.
  const auto product = mul(exp_sum_series(2, 2), bessel_i0_series(2, 2));
  CHECK(product(1, 1) == 2);
  CHECK(binomial_egf_series(2, 2)(1, 1) == 2);
  CHECK(diagonal_collapse(binomial_egf_series(2, 2))[1] == 2);
}

TEST_CASE("all identities at order 12") {
  const auto report = verify_identities(12);
  REQUIRE(report.checks.size() == 6);
  for (const auto& c : report.checks) {
    INFO(c.id);
    CHECK(c.passed);
  }
  CHECK_THROWS_AS(verify_identities(1), std::invalid_argument);
}

TEST_CASE("exponential boundary residual is nonzero and documented") {
  const auto residual = exponential_boundary_residual(4);
  CHECK_FALSE(residual.is_zero());
  // Frozen from an independent fraction computation.
  CHECK(residual(0, 0) == -1);
  CHECK(residual(1, 0) == -2);
  CHECK(residual(1, 1) == -3);
  CHECK(residual(2, 0) == make_rational(-5, 2));
  CHECK(residual(2, 2) == -4);
  CHECK(residual(3, 1) == make_rational(-11, 3));

  const auto report = verify_main_theorem(6);
  bool documented = false;
  for (const auto& n : report.notes) {
    if (n.find("residual") != std::string::npos && n.find("nonzero") != std::string::npos) {
      documented = true;
    }
  }
  CHECK(documented);
}

TEST_CASE("series symmetry") {
  CHECK(check_series_symmetry(10).all_passed());
}
