#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "splitperm/exact.hpp"
#include "splitperm/permutation.hpp"
#include "splitperm/report.hpp"

namespace splitperm {

/// Largest n the exhaustive routines accept unless the caller raises it.
inline constexpr int kDefaultExhaustiveLimit = 10;

/// Thrown when an exhaustive search is asked to run above its size guard.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(int n, int limit);
  int n() const { return n_; }
  int limit() const { return limit_; }

 private:
  int n_;
  int limit_;
};

/// Visits every permutation of size n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

/// All w in S_n with in_K(w, r), lexicographically ordered.
std::vector<Permutation> enumerate_K(int r, int n, int limit = kDefaultExhaustiveLimit);

/// |K(r,n)| by exhaustive search, without materializing the set.
Integer brute_count(int r, int n, int limit = kDefaultExhaustiveLimit);

/// Smallest value in positions r+1..n, or 0 if there is none.
int smallest_right_value(const Permutation& w, int r);

/// Splits K_L(r,n) into classes S(i) keyed by the smallest value right of r.
/// Keys 1..r are always present (possibly empty). Requires 1 <= r < n.
std::map<int, std::vector<Permutation>> partition_by_smallest_right(
    int r, int n, int limit = kDefaultExhaustiveLimit);

/// brute_count = k_closed = k_via_corollary on 0 <= r <= n <= n_max.
/// The corollary route needs r >= 1; at r = 0 only the first equality applies.
VerificationReport check_oracle(int n_max, int limit = kDefaultExhaustiveLimit);

/// K = K_L + K_R sizes, remove_max fiber sizes over K_R, S(i) class sizes and
/// the rotate180 bijection K(r,n) -> K(n-r,n), for all n <= n_max.
VerificationReport check_structure(int n_max, int limit = kDefaultExhaustiveLimit);

/// Predicate-level invariants over all of S_n, n <= n_max: witnesses reproduce
/// the pattern, the linear-time membership test agrees with the witness search,
/// avoidance is universal at r = 0 and r = n, and remove_max / insert_max
/// move members between the expected classes.
VerificationReport check_predicates(int n_max, int limit = kDefaultExhaustiveLimit);

/// k_closed(r,n) = k_closed(n-r,n) and k_closed(r,n) >= r!(n-r)! for n <= n_max.
VerificationReport check_closed_form_symmetry(int n_max);

}  // namespace splitperm
