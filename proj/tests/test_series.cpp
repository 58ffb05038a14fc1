#include "doctest.h"

#include <random>
#include <stdexcept>

#include "splitperm/series.hpp"

using namespace splitperm;

namespace {

Rational q(long num, long den) { return make_rational(num, den); }

BivariateSeries random_series(int nx, int ny, std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  BivariateSeries s(nx, ny);
  for (int r = 0; r <= nx; ++r) {
    for (int c = 0; c <= ny; ++c) s(r, c) = q(num(rng), den(rng));
  }
  return s;
}

BivariateSeries monomial(int r, int s, int nx, int ny) {
  BivariateSeries out(nx, ny);
  out(r, s) = 1;
  return out;
}

}  // namespace

TEST_CASE("constants and coefficient-wise arithmetic") {
  const auto one = series_const(1, 4, 4);
  CHECK(one(0, 0) == 1);
  CHECK(one(2, 3) == 0);
  CHECK_THROWS_AS(one(5, 0), std::out_of_range);
  CHECK_THROWS_AS(BivariateSeries(-1, 2), std::invalid_argument);

  std::mt19937 rng(5);
  const auto s = random_series(4, 3, rng);
  CHECK(add(s, BivariateSeries(4, 3)) == s);
  CHECK(scale(s, 0).is_zero());
  CHECK(sub(s, s).is_zero());
  CHECK(scale(s, 2) == add(s, s));

  // Binary operations shrink to the common window.
  const auto mixed = add(random_series(2, 5, rng), random_series(4, 3, rng));
  CHECK(mixed.nx() == 2);
  CHECK(mixed.ny() == 3);
}

TEST_CASE("Cauchy product") {
  std::mt19937 rng(9);
  const auto s = random_series(5, 5, rng);
  CHECK(mul(s, series_const(1, 5, 5)) == s);
  CHECK(mul(monomial(1, 0, 3, 3), monomial(0, 1, 3, 3)) == monomial(1, 1, 3, 3));
  const auto e = exp_sum_series(4, 4);
  CHECK(mul(e, e)(1, 0) == 2);
  // e^{2(x+y)} has coefficient 2^{r+s}/(r! s!)
  CHECK(mul(e, e)(3, 2) == q(32, 12));
  CHECK(mul(geometric_series(6, 6), unit_denominator(6, 6)) == series_const(1, 6, 6));
}

TEST_CASE("named series coefficients") {
  const auto e = exp_sum_series(3, 3);
  CHECK(e(0, 0) == 1);
  CHECK(e(2, 1) == q(1, 2));
  CHECK(e(3, 3) == q(1, 36));

  const auto b = bessel_i0_series(3, 3);
  CHECK(b(0, 0) == 1);
  CHECK(b(2, 2) == q(1, 4));
  CHECK(b(1, 2) == 0);

  const auto egf = binomial_egf_series(4, 4);
  CHECK(egf(0, 0) == 1);
  CHECK(egf(2, 1) == q(3, 2));
  CHECK(egf(2, 2) == q(3, 2));
  CHECK(egf(4, 0) == q(1, 24));

  const auto g = geometric_series(6, 6);
  CHECK(g(5, 3) == 1);

  const auto L = L_series(4, 4);
  CHECK(L(1, 1) == 1);
  CHECK(L(2, 2) == q(1, 2));
  CHECK(L(3, 0) == 0);
  CHECK(L(0, 3) == 0);

  const auto K = K_series(4, 4);
  CHECK(K(0, 0) == 1);
  CHECK(K(2, 2) == q(7, 2));
  CHECK(K(1, 1) == 2);
  CHECK(K(2, 3) == q(47, 12));
  CHECK(K(4, 4) == q(709, 144));

  const auto A = A_series(4, 4);
  CHECK(A(3, 0) == 0);
  CHECK(A(1, 1) == 1);
  CHECK(A(2, 2) == q(5, 2));
  CHECK(add(A, geometric_series(4, 4)) == K);
}

TEST_CASE("unit division") {
  CHECK(divide_by_unit(series_const(1, 5, 5), unit_denominator(5, 5)) == geometric_series(5, 5));
  std::mt19937 rng(17);
  const auto s = random_series(4, 4, rng);
  CHECK(divide_by_unit(s, series_const(1, 4, 4)) == s);
  CHECK_THROWS_AS(divide_by_unit(s, BivariateSeries(4, 4)), std::domain_error);

  for (int trial = 0; trial < 100; ++trial) {
    const int nx = static_cast<int>(rng() % 5);
    const int ny = static_cast<int>(rng() % 5);
    const auto num = random_series(nx, ny, rng);
    auto den = random_series(nx, ny, rng);
    if (den(0, 0) == 0) den(0, 0) = 1;
    CHECK(mul(divide_by_unit(num, den), den) == num);
  }
}

TEST_CASE("formal integration and differentiation") {
  const auto xy = integrate_xy(series_const(1, 3, 3));
  CHECK(xy == monomial(1, 1, 3, 3));
  CHECK(partial_xy(monomial(1, 1, 3, 3)) == series_const(1, 2, 2));
  CHECK(partial_xy(series_const(5, 3, 3)).is_zero());
  CHECK(partial_xy(series_const(5, 3, 3)).nx() == 2);
  CHECK_THROWS_AS(partial_xy(BivariateSeries(0, 3)), std::invalid_argument);

  const auto integral = integrate_xy(binomial_egf_series(4, 4));
  CHECK(integral(1, 1) == 1);
  CHECK(integral(2, 2) == q(1, 2));
  CHECK(integral(3, 0) == 0);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_series(1 + static_cast<int>(rng() % 6), 1 + static_cast<int>(rng() % 6), rng);
    const auto back = partial_xy(integrate_xy(s));
    CHECK(back.nx() == s.nx() - 1);
    CHECK(back == s);
  }
}

TEST_CASE("diagonal collapse") {
  const auto d = diagonal_collapse(binomial_egf_series(5, 5));
  CHECK(d[3] == q(10, 3));
  const auto g = diagonal_collapse(geometric_series(6, 6));
  for (int m = 0; m <= 6; ++m) CHECK(g[m] == m + 1);
  const auto c = diagonal_collapse(series_const(1, 3, 3));
  CHECK(c == std::vector<Rational>{1, 0, 0, 0});
  CHECK_THROWS_AS(diagonal_collapse(BivariateSeries(2, 3)), std::invalid_argument);
}

TEST_CASE("JSON dump") {
  auto s = BivariateSeries(1, 1);
  s(0, 0) = q(7, 2);
  s(1, 1) = -1;
  CHECK(to_json(s) == R"({"nx":1,"ny":1,"coeffs":[[["7","2"],["0","1"]],[["0","1"],["-1","1"]]]})");

  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto r = random_series(static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), rng);
    const auto back = series_from_json(to_json(r));
    CHECK(back.nx() == r.nx());
    CHECK(back.ny() == r.ny());
    CHECK(back == r);
  }
  CHECK_THROWS_AS(series_from_json("{}"), std::invalid_argument);
  CHECK_THROWS_AS(series_from_json(R"({"nx":0,"ny":0,"coeffs":[[["1","0"]]]})"), std::domain_error);
  CHECK_THROWS_AS(series_from_json(R"({"nx":1,"ny":0,"coeffs":[[["1","1"]]]})"), std::invalid_argument);
}
