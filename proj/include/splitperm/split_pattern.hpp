#pragma once

#include <optional>
#include <vector>

#include "splitperm/permutation.hpp"

namespace splitperm {

/// A pattern u = u(1)...u(j) | u(j+1)...u(k).
///
/// A permutation w contains the split pattern with respect to position r
/// when some subsequence w(i_1)...w(i_k) is order-isomorphic to u and
/// i_j <= r < i_{j+1}. For split == 0 only r < i_1 is required; for
/// split == k only i_k <= r.
class SplitPattern {
 public:
  /// Throws std::invalid_argument unless 0 <= split <= pattern.size().
  SplitPattern(Permutation pattern, int split);

  const Permutation& pattern() const { return pattern_; }
  int split() const { return split_; }
  int size() const { return pattern_.size(); }

  friend bool operator==(const SplitPattern&, const SplitPattern&) = default;

 private:
  Permutation pattern_;
  int split_;
};

/// 3|12
const SplitPattern& pattern_3_12();
/// 23|1
const SplitPattern& pattern_23_1();

/// 1-indexed, strictly increasing positions i_1 < ... < i_k in w.
struct PatternWitness {
  std::vector<int> indices;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

/// Returns the lexicographically smallest witness, or nullopt if w avoids p
/// with respect to r. Throws std::out_of_range unless 0 <= r <= w.size().
std::optional<PatternWitness> contains_split(const Permutation& w,
                                             const SplitPattern& p, int r);

/// True iff w avoids both 3|12 and 23|1 with respect to r (0 <= r <= n).
bool in_K(const Permutation& w, int r);

/// Combinatorial form of the fiber-bundle criterion for the projection of
/// the Schubert variety X_w to Gr(r,n). Same verdict as in_K, but only
/// defined for 1 <= r <= n.
bool is_fiber_bundle(const Permutation& w, int r);

}  // namespace splitperm
