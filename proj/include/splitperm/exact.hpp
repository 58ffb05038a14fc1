#pragma once

#include <gmpxx.h>

#include <string>

namespace splitperm {

/// Arbitrary-precision integer; counts such as k(0,n) = n! overflow 64 bits
/// from n = 21 on.
using Integer = mpz_class;

/// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;

Integer factorial(long n);

/// (m)_i = m(m-1)...(m-i+1); (m)_0 = 1. Throws std::invalid_argument for i < 0.
Integer falling_factorial(long m, long i);

/// Binomial coefficient for n >= 0; zero when k < 0 or k > n.
/// Throws std::invalid_argument for n < 0.
Integer binomial(long n, long k);

/// Canonical p/q from two integers. Throws std::domain_error if q == 0.
Rational make_rational(const Integer& num, const Integer& den);

std::string to_decimal(const Integer& x);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace splitperm
