#include "splitperm/exact.hpp"

#include <stdexcept>

namespace splitperm {

Integer factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  Integer out = 1;
  for (long k = 2; k <= n; ++k) out *= k;
  return out;
}

Integer falling_factorial(long m, long i) {
  if (i < 0) throw std::invalid_argument("falling_factorial: negative length");
  Integer out = 1;
  for (long t = 0; t < i; ++t) out *= m - t;
  return out;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: negative top argument");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  // Multiplicative recurrence; every partial quotient is itself a binomial.
  Integer out = 1;
  for (long t = 1; t <= k; ++t) {
    out *= n - k + t;
    out /= t;
  }
  return out;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_decimal(const Integer& x) { return x.get_str(10); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str(10);
  return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

}  // namespace splitperm
