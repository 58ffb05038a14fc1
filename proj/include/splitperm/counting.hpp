#pragma once

#include <map>
#include <string>
#include <utility>

#include "splitperm/exact.hpp"
#include "splitperm/report.hpp"

namespace splitperm {

/// k(r,n) = r!(n-r)! + sum_{i=1}^{r} sum_{j=1}^{n-r}
///          C(n-i-j, r-i) (r)_{i-1} (n-r)_{j-1},  with k(0,0) = 1.
/// Throws std::out_of_range unless 0 <= r <= n.
Integer k_closed(long r, long n);

/// |K_L(r,n)|, the members of K(r,n) whose maximum sits at a position <= r.
/// Equals sum_{i=1}^{r} C(n-i-1, r-i) (r)_{i-1} for r < n and r! for r = n.
Integer kl_closed(long r, long n);

/// k(r,n) = sum_{j=0}^{n-r} (n-r)_j |K_L(r,n-j)|, for 1 <= r <= n.
Integer k_via_corollary(long r, long n);

/// a(r,s) = k(r,r+s)/(r! s!) - 1.
Rational a_value(long r, long s);

/// Checks a(r,s) = a(r,s-1) + a(r-1,s) - a(r-1,s-1) + C(r+s-2,r-1)/(r! s!)
/// on 1 <= r <= r_max, 1 <= s <= s_max, plus the zero boundary a(r,0) = a(0,s) = 0.
VerificationReport check_recursion(long r_max, long s_max);

/// k(r,n) for 0 <= r <= n, 1 <= n <= n_max.
class CountTable {
 public:
  explicit CountTable(long n_max);

  long n_max() const { return n_max_; }
  const Integer& at(long r, long n) const;

  /// Keyed by (n, r), so iteration follows the serialization order.
  const std::map<std::pair<long, long>, Integer>& entries() const { return entries_; }

  /// "r,n,k" header then one row per entry with r <= r_max, sorted by (n, r).
  std::string to_csv(long r_max = -1) const;
  /// [{"r":..,"n":..,"k":"<decimal>"}, ...] in the same order.
  std::string to_json(long r_max = -1) const;

 private:
  long n_max_;
  // keyed (n, r) so iteration order is the serialization order
  std::map<std::pair<long, long>, Integer> entries_;
};

/// Throws std::invalid_argument for n_max < 1.
CountTable build_table(long n_max);

}  // namespace splitperm
