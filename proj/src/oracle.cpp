#include "splitperm/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "splitperm/counting.hpp"
#include "splitperm/split_pattern.hpp"

namespace splitperm {

namespace {

void require_guard(int n, int limit) {
  if (n > limit) throw GuardExceeded(n, limit);
}

void require_range(int r, int n) {
  if (n < 0 || r < 0 || r > n) {
    throw std::out_of_range("need 0 <= r <= n, got r=" + std::to_string(r) +
                            ", n=" + std::to_string(n));
  }
}

std::string cell(int r, int n) {
  return "(r,n)=(" + std::to_string(r) + "," + std::to_string(n) + ")";
}

bool max_on_left(const Permutation& w, int r) { return w.position_of(w.size()) <= r; }

// Re-derives the relative order of the witnessed values from scratch.
bool witness_is_valid(const Permutation& w, const SplitPattern& p, int r,
                      const PatternWitness& witness) {
  const auto& idx = witness.indices;
  const int k = p.size();
  if (static_cast<int>(idx.size()) != k) return false;
  for (int t = 0; t < k; ++t) {
    if (idx[t] < 1 || idx[t] > w.size()) return false;
    if (t > 0 && idx[t - 1] >= idx[t]) return false;
  }
  const int j = p.split();
  if (j > 0 && idx[j - 1] > r) return false;
  if (j < k && idx[j] <= r) return false;
  for (int s = 0; s < k; ++s) {
    int rank = 1;
    for (int t = 0; t < k; ++t) {
      if (w(idx[t]) < w(idx[s])) ++rank;
    }
    if (rank != p.pattern()(s + 1)) return false;
  }
  return true;
}

// Independent triple loop for length-3 split patterns; the first hit in
// loop order is the lexicographically smallest witness.
std::optional<PatternWitness> triple_loop_search(const Permutation& w,
                                                 const SplitPattern& p, int r) {
  const int n = w.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      for (int c = b + 1; c <= n; ++c) {
        const int pos[3] = {a, b, c};
        bool split_ok = true;
        for (int t = 0; t < 3; ++t) {
          const bool is_left = t < p.split();
          if (is_left != (pos[t] <= r)) split_ok = false;
        }
        if (!split_ok) continue;
        PatternWitness cand{{a, b, c}};
        if (witness_is_valid(w, p, r, cand)) return cand;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

GuardExceeded::GuardExceeded(int n, int limit)
    : std::runtime_error("exhaustive search over S_" + std::to_string(n) +
                         " exceeds the guard n <= " + std::to_string(limit) +
                         " (use --unsafe-n-max to raise it)"),
      n_(n),
      limit_(limit) {}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
  std::vector<int> v(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

std::vector<Permutation> enumerate_K(int r, int n, int limit) {
  require_range(r, n);
  require_guard(n, limit);
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& w) {
    if (in_K(w, r)) out.push_back(w);
  });
  return out;
}

Integer brute_count(int r, int n, int limit) {
  require_range(r, n);
  require_guard(n, limit);
  unsigned long count = 0;
  for_each_permutation(n, [&](const Permutation& w) {
    if (in_K(w, r)) ++count;
  });
  return Integer(count);
}

int smallest_right_value(const Permutation& w, int r) {
  auto right = right_set(w, r);
  return right.empty() ? 0 : *right.begin();
}

std::map<int, std::vector<Permutation>> partition_by_smallest_right(int r, int n,
                                                                    int limit) {
  if (r < 1 || r >= n) {
    throw std::out_of_range("partition_by_smallest_right: need 1 <= r < n, got r=" +
                            std::to_string(r) + ", n=" + std::to_string(n));
  }
  require_guard(n, limit);
  std::map<int, std::vector<Permutation>> classes;
  for (int i = 1; i <= r; ++i) classes[i];
  for (const auto& w : enumerate_K(r, n, limit)) {
    if (max_on_left(w, r)) classes[smallest_right_value(w, r)].push_back(w);
  }
  return classes;
}

VerificationReport check_oracle(int n_max, int limit) {
  require_guard(n_max, limit);
  CheckResult res{"oracle", "brute_count = k_closed = k_via_corollary"};
  for (int n = 0; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      ++res.cells_checked;
      const Integer brute = brute_count(r, n, limit);
      const Integer closed = k_closed(r, n);
      if (brute != closed) {
        res.fail(cell(r, n) + ": brute " + to_decimal(brute) + " vs closed " +
                 to_decimal(closed));
      }
      if (r >= 1) {
        const Integer via = k_via_corollary(r, n);
        if (via != closed) {
          res.fail(cell(r, n) + ": corollary " + to_decimal(via) + " vs closed " +
                   to_decimal(closed));
        }
      }
    }
  }
  VerificationReport report;
  report.checks.push_back(std::move(res));
  report.notes.push_back("oracle: largest n tested = " + std::to_string(n_max));
  return report;
}

VerificationReport check_structure(int n_max, int limit) {
  require_guard(n_max, limit);
  CheckResult decomposition{"decomposition", "|K_L(r,n)| + |K_R(r,n)| = k(r,n), |K_L| = kl_closed"};
  CheckResult fibers{"fibers", "remove_max: K_R(r,n) -> K(r,n-1) has fibers of size n-r"};
  CheckResult classes{"smallest_right_classes", "|S(i)| = C(n-i-1,r-i) (r)_{i-1}"};
  CheckResult rotation{"rotate180_bijection", "rotate180 maps K(r,n) onto K(n-r,n)"};

  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::vector<Permutation>> K(n + 1);
    for (int r = 0; r <= n; ++r) K[r] = enumerate_K(r, n, limit);

    for (int r = 0; r <= n; ++r) {
      long left = 0;
      long right = 0;
      for (const auto& w : K[r]) (max_on_left(w, r) ? left : right) += 1;
      ++decomposition.cells_checked;
      if (Integer(left + right) != k_closed(r, n)) {
        decomposition.fail(cell(r, n) + ": |K_L|+|K_R| = " + std::to_string(left + right));
      }
      if (r >= 1 && Integer(left) != kl_closed(r, n)) {
        decomposition.fail(cell(r, n) + ": |K_L| = " + std::to_string(left) +
                           " vs kl_closed " + to_decimal(kl_closed(r, n)));
      }

      if (r < n) {
        std::map<Permutation, int> fiber;
        for (const auto& w : K[r]) {
          if (!max_on_left(w, r)) ++fiber[remove_max(w)];
        }
        const auto base = enumerate_K(r, n - 1, limit);
        ++fibers.cells_checked;
        if (fiber.size() != base.size()) {
          fibers.fail(cell(r, n) + ": image has " + std::to_string(fiber.size()) +
                      " elements, K(r,n-1) has " + std::to_string(base.size()));
        }
        for (const auto& w : base) {
          auto it = fiber.find(w);
          const int size = it == fiber.end() ? 0 : it->second;
          if (size != n - r) {
            fibers.fail(cell(r, n) + ": fiber over " + to_string(w) + " has " +
                        std::to_string(size) + " elements");
          }
        }
      }

      if (r >= 1 && r < n) {
        long total = 0;
        for (const auto& [i, members] : partition_by_smallest_right(r, n, limit)) {
          ++classes.cells_checked;
          total += static_cast<long>(members.size());
          const Integer expected = binomial(n - i - 1, r - i) * falling_factorial(r, i - 1);
          if (Integer(static_cast<long>(members.size())) != expected) {
            classes.fail(cell(r, n) + ": |S(" + std::to_string(i) + ")| = " +
                         std::to_string(members.size()) + ", expected " +
                         to_decimal(expected));
          }
        }
        if (Integer(total) != kl_closed(r, n)) {
          classes.fail(cell(r, n) + ": classes cover " + std::to_string(total) +
                       " elements of K_L");
        }
      }

      std::set<Permutation> image;
      for (const auto& w : K[r]) image.insert(rotate180(w));
      const std::set<Permutation> target(K[n - r].begin(), K[n - r].end());
      ++rotation.cells_checked;
      if (image.size() != K[r].size() || image != target) {
        rotation.fail(cell(r, n) + ": rotated image differs from K(n-r,n)");
      }
    }
  }

  VerificationReport report;
  report.checks = {std::move(decomposition), std::move(fibers), std::move(classes),
                   std::move(rotation)};
  return report;
}

VerificationReport check_predicates(int n_max, int limit) {
  require_guard(n_max, limit);
  CheckResult witnesses{"witness_validity", "returned witnesses reproduce the pattern"};
  CheckResult search{"search_agreement", "witness search = triple loop = linear-time in_K"};
  CheckResult universal{"universal_ends", "in_K(w,0) and in_K(w,n) hold for every w"};
  CheckResult projection{"remove_max_classes", "remove_max sends K(r,n) to K(r,n-1) or K(r-1,n-1)"};
  CheckResult insertion{"insert_max_right", "insert_max at pos > r preserves in_K(.,r)"};

  const SplitPattern* builtins[] = {&pattern_3_12(), &pattern_23_1()};
  for (int n = 0; n <= n_max; ++n) {
    for_each_permutation(n, [&](const Permutation& w) {
      ++universal.cells_checked;
      if (!in_K(w, 0) || !in_K(w, n)) universal.fail(to_string(w));

      for (int r = 0; r <= n; ++r) {
        bool contained = false;
        for (const SplitPattern* p : builtins) {
          const auto found = contains_split(w, *p, r);
          const auto reference = triple_loop_search(w, *p, r);
          ++search.cells_checked;
          if (found != reference) {
            search.fail(to_string(w) + " at r=" + std::to_string(r) +
                        ": witness search disagrees with triple loop");
          }
          if (found) {
            contained = true;
            ++witnesses.cells_checked;
            if (!witness_is_valid(w, *p, r, *found)) {
              witnesses.fail(to_string(w) + " at r=" + std::to_string(r));
            }
          }
        }
        if (contained == in_K(w, r)) {
          search.fail(to_string(w) + " at r=" + std::to_string(r) +
                      ": in_K disagrees with witness search");
        }

        if (n >= 1 && in_K(w, r)) {
          ++projection.cells_checked;
          const Permutation smaller = remove_max(w);
          const int r_target = max_on_left(w, r) ? r - 1 : r;
          if (!in_K(smaller, r_target)) {
            projection.fail(to_string(w) + " at r=" + std::to_string(r));
          }
        }

        for (int pos = r + 1; pos <= n + 1; ++pos) {
          ++insertion.cells_checked;
          if (in_K(insert_max(w, pos), r) != in_K(w, r)) {
            insertion.fail(to_string(w) + " at r=" + std::to_string(r) + ", pos=" +
                           std::to_string(pos));
          }
        }
      }
    });
  }

  VerificationReport report;
  report.checks = {std::move(witnesses), std::move(search), std::move(universal),
                   std::move(projection), std::move(insertion)};
  return report;
}

VerificationReport check_closed_form_symmetry(int n_max) {
  CheckResult symmetry{"closed_form_symmetry", "k(r,n) = k(n-r,n)"};
  CheckResult bound{"closed_form_lower_bound", "k(r,n) >= r!(n-r)!"};
  for (long n = 0; n <= n_max; ++n) {
    for (long r = 0; r <= n; ++r) {
      const Integer k = k_closed(r, n);
      ++symmetry.cells_checked;
      if (k != k_closed(n - r, n)) symmetry.fail(cell(r, n));
      ++bound.cells_checked;
      if (k < factorial(r) * factorial(n - r)) bound.fail(cell(r, n));
    }
  }
  VerificationReport report;
  report.checks = {std::move(symmetry), std::move(bound)};
  return report;
}

}  // namespace splitperm
