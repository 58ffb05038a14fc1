#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "splitperm/counting.hpp"
#include "splitperm/oracle.hpp"

using namespace splitperm;

namespace {

std::vector<std::string> strings(const std::vector<Permutation>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(to_string(w));
  return out;
}

}  // namespace

TEST_CASE("enumerate_K small cases") {
  CHECK(strings(enumerate_K(1, 3)) == std::vector<std::string>{"123", "132", "213", "231", "321"});
  CHECK(enumerate_K(0, 3).size() == 6);
  CHECK(strings(enumerate_K(2, 4)) ==
        std::vector<std::string>{"1234", "1243", "1324", "1342", "1432", "2134", "2143",
                                 "3124", "3142", "3214", "3241", "4132", "4231", "4321"});
  CHECK(strings(enumerate_K(0, 0)) == std::vector<std::string>{""});

  const auto k = enumerate_K(3, 6);
  CHECK(std::is_sorted(k.begin(), k.end()));
  CHECK(Integer(static_cast<long>(k.size())) == k_closed(3, 6));
}

TEST_CASE("brute_count against the printed values") {
  CHECK(brute_count(2, 5) == 47);
  CHECK(brute_count(3, 7) == 676);
  for (int n = 0; n <= 7; ++n) CHECK(brute_count(n, n) == factorial(n));
  // Frozen from a direct itertools enumeration of the definition.
  CHECK(brute_count(4, 8) == 2836);
  CHECK(brute_count(2, 8) == 5870);
}

TEST_CASE("exhaustive guard") {
  CHECK_THROWS_AS(brute_count(2, 11), GuardExceeded);
  CHECK_THROWS_AS(enumerate_K(2, 11), GuardExceeded);
  CHECK_THROWS_AS(brute_count(2, 5, 4), GuardExceeded);
  CHECK(brute_count(2, 5, 5) == 47);
  try {
    brute_count(1, 12);
  } catch (const GuardExceeded& e) {
    CHECK(e.n() == 12);
    CHECK(e.limit() == kDefaultExhaustiveLimit);
  }
  CHECK_THROWS_AS(brute_count(4, 3), std::out_of_range);
}

TEST_CASE("partition by smallest right value") {
  const auto classes = partition_by_smallest_right(6, 9);
  const auto w = parse_permutation("391276854");
  REQUIRE(classes.count(4));
  CHECK(std::find(classes.at(4).begin(), classes.at(4).end(), w) != classes.at(4).end());
  CHECK(smallest_right_value(w, 6) == 4);

  const auto one = partition_by_smallest_right(1, 3);
  REQUIRE(one.size() == 1);
  CHECK(strings(one.at(1)) == std::vector<std::string>{"321"});

  const auto two = partition_by_smallest_right(2, 4);
  CHECK(strings(two.at(1)) == std::vector<std::string>{"4231", "4321"});
  CHECK(strings(two.at(2)) == std::vector<std::string>{"1432", "4132"});

  CHECK_THROWS_AS(partition_by_smallest_right(0, 4), std::out_of_range);
  CHECK_THROWS_AS(partition_by_smallest_right(4, 4), std::out_of_range);
}

TEST_CASE("structural decompositions for n <= 7") {
  const auto report = check_structure(7);
  for (const auto& c : report.checks) {
    INFO(c.id);
    CHECK(c.passed);
    CHECK(c.cells_checked > 0);
  }
}

TEST_CASE("oracle equivalence for n <= 8") {
  const auto report = check_oracle(8);
  CHECK(report.all_passed());
  CHECK(report.checks.front().cells_checked == 45);
}
