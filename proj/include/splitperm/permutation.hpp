#pragma once

#include <compare>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splitperm {

/// A permutation of {1,...,n} in one-line notation.
///
/// All positions and values are 1-indexed, so `w(k)` is the value at
/// position k for 1 <= k <= n. The empty permutation (n = 0) is valid.
/// Instances are immutable once constructed.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `values` is a rearrangement of {1,...,n}.
  /// Throws std::invalid_argument otherwise.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }

  /// w(k), 1 <= k <= n. Throws std::out_of_range outside that range.
  int operator()(int k) const;

  std::span<const int> values() const { return values_; }

  /// Position of value v, i.e. w^{-1}(v).
  int position_of(int v) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<int> values_;
};

Permutation make_permutation(std::vector<int> values);

/// Accepts both the compact digit form ("315642") and the comma-separated
/// form ("3,1,5,6,4,2"). Throws std::invalid_argument on malformed text.
Permutation parse_permutation(std::string_view text);

/// Compact form for n <= 9, comma-separated otherwise.
std::string to_string(const Permutation& w);

/// Values in positions 1..r.
std::set<int> left_set(const Permutation& w, int r);
/// Values in positions r+1..n.
std::set<int> right_set(const Permutation& w, int r);

/// Deletes the value n from the one-line notation.
Permutation remove_max(const Permutation& w);

/// Inserts the value n+1 so that it lands at position `pos` (1 <= pos <= n+1).
Permutation insert_max(const Permutation& w, int pos);

/// Rotates the permutation matrix by 180 degrees: k -> n+1-w(n+1-k).
Permutation rotate180(const Permutation& w);

/// #{k <= j : w(k) <= i}, for 0 <= i, j <= n.
int rank_function(const Permutation& w, int i, int j);

}  // namespace splitperm
