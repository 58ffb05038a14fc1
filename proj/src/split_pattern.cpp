#include "splitperm/split_pattern.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace splitperm {

SplitPattern::SplitPattern(Permutation pattern, int split)
    : pattern_(std::move(pattern)), split_(split) {
  if (split_ < 0 || split_ > pattern_.size()) {
    throw std::invalid_argument("split index " + std::to_string(split_) +
                                " outside [0," + std::to_string(pattern_.size()) + "]");
  }
}

const SplitPattern& pattern_3_12() {
  static const SplitPattern p(Permutation({3, 1, 2}), 1);
  return p;
}

const SplitPattern& pattern_23_1() {
  static const SplitPattern p(Permutation({2, 3, 1}), 2);
  return p;
}

namespace {

void require_position(const Permutation& w, int r) {
  if (r < 0 || r > w.size()) {
    throw std::out_of_range("position " + std::to_string(r) + " outside [0," +
                            std::to_string(w.size()) + "]");
  }
}

// Depth-first search over increasing index sequences in lexicographic order,
// so the first complete match is the lexicographically smallest witness.
class WitnessSearch {
 public:
  WitnessSearch(const Permutation& w, const SplitPattern& p, int r)
      : w_(w), p_(p), r_(r) {
    chosen_.reserve(static_cast<std::size_t>(p.size()));
  }

  std::optional<PatternWitness> run() {
    if (extend(1)) return PatternWitness{chosen_};
    return std::nullopt;
  }

 private:
  bool extend(int first_candidate) {
    const int t = static_cast<int>(chosen_.size()) + 1;  // pattern slot, 1-indexed
    if (t > p_.size()) return true;
    const bool left_slot = t <= p_.split();
    const int lo = left_slot ? first_candidate : std::max(first_candidate, r_ + 1);
    const int hi = left_slot ? r_ : w_.size();
    // Leave room for the remaining slots.
    const int last = std::min(hi, w_.size() - (p_.size() - t));
    for (int i = lo; i <= last; ++i) {
      if (!consistent(t, i)) continue;
      chosen_.push_back(i);
      if (extend(i + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  bool consistent(int t, int i) const {
    const auto& u = p_.pattern();
    for (int s = 1; s < t; ++s) {
      const bool in_w = w_(chosen_[s - 1]) < w_(i);
      const bool in_u = u(s) < u(t);
      if (in_w != in_u) return false;
    }
    return true;
  }

  const Permutation& w_;
  const SplitPattern& p_;
  int r_;
  std::vector<int> chosen_;
};

// 3|12: some right ascent b < c (b first) lies below the largest left value.
bool scan_3_12(const Permutation& w, int r) {
  int left_max = 0;
  for (int k = 1; k <= r; ++k) left_max = std::max(left_max, w(k));
  int right_min = w.size() + 1;
  for (int k = r + 1; k <= w.size(); ++k) {
    const int c = w(k);
    if (right_min < c && c < left_max) return true;
    right_min = std::min(right_min, c);
  }
  return false;
}

// 23|1: some left ascent a < b (a first) lies above the smallest right value.
bool scan_23_1(const Permutation& w, int r) {
  int right_min = w.size() + 1;
  for (int k = r + 1; k <= w.size(); ++k) right_min = std::min(right_min, w(k));
  int smallest_above = w.size() + 1;  // smallest earlier left value > right_min
  for (int k = 1; k <= r; ++k) {
    const int b = w(k);
    if (smallest_above < b) return true;
    if (b > right_min) smallest_above = std::min(smallest_above, b);
  }
  return false;
}

}  // namespace

std::optional<PatternWitness> contains_split(const Permutation& w,
                                             const SplitPattern& p, int r) {
  require_position(w, r);
  return WitnessSearch(w, p, r).run();
}

bool in_K(const Permutation& w, int r) {
  require_position(w, r);
  return !scan_3_12(w, r) && !scan_23_1(w, r);
}

bool is_fiber_bundle(const Permutation& w, int r) {
  if (r < 1 || r > w.size()) {
    throw std::out_of_range("fiber-bundle criterion needs 1 <= r <= n, got r=" +
                            std::to_string(r));
  }
  return in_K(w, r);
}

}  // namespace splitperm
