#include "splitperm/counting.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace splitperm {

namespace {

void require_range(long r, long n, long r_min, const char* what) {
  if (r < r_min || r > n) {
    throw std::out_of_range(std::string(what) + ": need " + std::to_string(r_min) +
                            " <= r <= n, got r=" + std::to_string(r) +
                            ", n=" + std::to_string(n));
  }
}

}  // namespace

Integer k_closed(long r, long n) {
  require_range(r, n, 0, "k_closed");
  if (n == 0) return 1;
  Integer total = factorial(r) * factorial(n - r);
  for (long i = 1; i <= r; ++i) {
    const Integer left = falling_factorial(r, i - 1);
    for (long j = 1; j <= n - r; ++j) {
      // n-i-j >= r-i >= 0 throughout, so the top argument is never negative.
      total += binomial(n - i - j, r - i) * left * falling_factorial(n - r, j - 1);
    }
  }
  return total;
}

Integer kl_closed(long r, long n) {
  require_range(r, n, 1, "kl_closed");
  if (r == n) return factorial(r);
  Integer total = 0;
  for (long i = 1; i <= r; ++i) {
    total += binomial(n - i - 1, r - i) * falling_factorial(r, i - 1);
  }
  return total;
}

Integer k_via_corollary(long r, long n) {
  require_range(r, n, 1, "k_via_corollary");
  Integer total = 0;
  for (long j = 0; j <= n - r; ++j) {
    total += falling_factorial(n - r, j) * kl_closed(r, n - j);
  }
  return total;
}

Rational a_value(long r, long s) {
  if (r < 0 || s < 0) throw std::out_of_range("a_value: negative index");
  return make_rational(k_closed(r, r + s), factorial(r) * factorial(s)) - 1;
}

VerificationReport check_recursion(long r_max, long s_max) {
  if (r_max < 1 || s_max < 1) {
    throw std::invalid_argument("check_recursion: bounds must be >= 1");
  }
  // a[r][s] for 0 <= r <= r_max, 0 <= s <= s_max
  std::vector<std::vector<Rational>> a(r_max + 1, std::vector<Rational>(s_max + 1));
  for (long r = 0; r <= r_max; ++r) {
    for (long s = 0; s <= s_max; ++s) a[r][s] = a_value(r, s);
  }

  CheckResult boundary{"recursion_boundary", "a(r,0) = a(0,s) = 0"};
  for (long r = 0; r <= r_max; ++r) {
    ++boundary.cells_checked;
    if (a[r][0] != 0) boundary.fail("a(" + std::to_string(r) + ",0) = " + to_string(a[r][0]));
  }
  for (long s = 1; s <= s_max; ++s) {
    ++boundary.cells_checked;
    if (a[0][s] != 0) boundary.fail("a(0," + std::to_string(s) + ") = " + to_string(a[0][s]));
  }

  CheckResult rec{"recursion",
                  "a(r,s) = a(r,s-1) + a(r-1,s) - a(r-1,s-1) + C(r+s-2,r-1)/(r! s!)"};
  for (long r = 1; r <= r_max; ++r) {
    for (long s = 1; s <= s_max; ++s) {
      ++rec.cells_checked;
      const Rational rhs = a[r][s - 1] + a[r - 1][s] - a[r - 1][s - 1] +
                           make_rational(binomial(r + s - 2, r - 1),
                                         factorial(r) * factorial(s));
      if (a[r][s] != rhs) {
        rec.fail("(" + std::to_string(r) + "," + std::to_string(s) + "): a = " +
                 to_string(a[r][s]) + ", recursion gives " + to_string(rhs));
      }
    }
  }

  VerificationReport report;
  report.checks.push_back(std::move(boundary));
  report.checks.push_back(std::move(rec));
  return report;
}

CountTable::CountTable(long n_max) : n_max_(n_max) {
  if (n_max < 1) throw std::invalid_argument("count table needs n_max >= 1");
  for (long n = 1; n <= n_max; ++n) {
    for (long r = 0; r <= n; ++r) {
      // k(r,n) = k(n-r,n): only the lower half needs the double sum.
      entries_.emplace(std::pair{n, r}, r <= n - r ? k_closed(r, n) : entries_.at({n, n - r}));
    }
  }
}

const Integer& CountTable::at(long r, long n) const {
  auto it = entries_.find({n, r});
  if (it == entries_.end()) {
    throw std::out_of_range("no table entry for (r,n)=(" + std::to_string(r) + "," +
                            std::to_string(n) + ")");
  }
  return it->second;
}

std::string CountTable::to_csv(long r_max) const {
  std::ostringstream out;
  out << "r,n,k\n";
  for (const auto& [key, k] : entries_) {
    const auto [n, r] = key;
    if (r_max >= 0 && r > r_max) continue;
    out << r << ',' << n << ',' << to_decimal(k) << '\n';
  }
  return out.str();
}

std::string CountTable::to_json(long r_max) const {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& [key, k] : entries_) {
    const auto [n, r] = key;
    if (r_max >= 0 && r > r_max) continue;
    rows.push_back({{"r", r}, {"n", n}, {"k", to_decimal(k)}});
  }
  return rows.dump() + "\n";
}

CountTable build_table(long n_max) { return CountTable(n_max); }

}  // namespace splitperm
