#pragma once

#include <string>
#include <vector>

#include "splitperm/exact.hpp"

namespace splitperm {

/// Truncated formal power series sum c[r][s] x^r y^s over exact rationals,
/// known on the rectangle 0 <= r <= nx, 0 <= s <= ny.
///
/// Coefficients outside the window are unknown, not zero: binary operations
/// and comparisons work on the intersection of the two windows.
class BivariateSeries {
 public:
  /// Zero series on [0,nx] x [0,ny]. Throws std::invalid_argument for
  /// negative orders.
  BivariateSeries(int nx, int ny);

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  const Rational& operator()(int r, int s) const { return coeffs_[index(r, s)]; }
  Rational& operator()(int r, int s) { return coeffs_[index(r, s)]; }

  /// Copy restricted to the smaller window [0,nx] x [0,ny].
  BivariateSeries truncated(int nx, int ny) const;

  /// True when every coefficient of the window is zero.
  bool is_zero() const;

  /// Equality over the window intersection.
  friend bool operator==(const BivariateSeries& a, const BivariateSeries& b);

 private:
  std::size_t index(int r, int s) const;

  int nx_;
  int ny_;
  std::vector<Rational> coeffs_;  // row-major in r
};

BivariateSeries series_const(const Rational& c, int nx, int ny);
/// The polynomial 1 - x - y + xy = (1-x)(1-y).
BivariateSeries unit_denominator(int nx, int ny);

BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b);
BivariateSeries scale(const BivariateSeries& a, const Rational& c);
/// Cauchy product truncated to the common window.
BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b);

/// Q with Q * den = num on the common window. Throws std::domain_error when
/// den(0,0) == 0.
BivariateSeries divide_by_unit(const BivariateSeries& num, const BivariateSeries& den);

/// Double antiderivative with zero constants: c'[r][s] = c[r-1][s-1]/(r s)
/// for r, s >= 1 and zero on the axes. The window is kept, so the top row and
/// column of the input do not contribute.
BivariateSeries integrate_xy(const BivariateSeries& s);

/// Mixed partial derivative: c'[r][s] = (r+1)(s+1) c[r+1][s+1]. The window
/// shrinks by one in each variable; throws std::invalid_argument when nx or
/// ny is 0.
BivariateSeries partial_xy(const BivariateSeries& s);

/// m-th entry is sum_{r+s=m} c[r][s], for m <= nx. Needs nx == ny.
std::vector<Rational> diagonal_collapse(const BivariateSeries& s);

/// e^{x+y}: 1/(a! b!)
BivariateSeries exp_sum_series(int nx, int ny);
/// e^x alone: 1/r! on the s = 0 row
BivariateSeries exp_x_series(int nx, int ny);
/// e^y alone
BivariateSeries exp_y_series(int nx, int ny);
/// I_0(2 sqrt(xy)) = sum_m (xy)^m / (m!)^2
BivariateSeries bessel_i0_series(int nx, int ny);
/// C(r+s, r) / (r! s!)
BivariateSeries binomial_egf_series(int nx, int ny);
/// 1/((1-x)(1-y)): every coefficient 1
BivariateSeries geometric_series(int nx, int ny);
/// C(r+s-2, r-1)/(r! s!) for r, s >= 1; zero on both axes
BivariateSeries L_series(int nx, int ny);
/// k(r, r+s)/(r! s!)
BivariateSeries K_series(int nx, int ny);
/// a(r,s) = k(r, r+s)/(r! s!) - 1
BivariateSeries A_series(int nx, int ny);

/// {"nx":..,"ny":..,"coeffs":[[["num","den"],..],..]}, rows indexed by r.
std::string to_json(const BivariateSeries& s);
/// Inverse of to_json. Throws std::invalid_argument on malformed input.
BivariateSeries series_from_json(const std::string& text);

}  // namespace splitperm
