#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace splitperm {

/// Outcome of one named identity or consistency check.
struct CheckResult {
  CheckResult() = default;
  CheckResult(std::string id_, std::string description_)
      : id(std::move(id_)), description(std::move(description_)) {}

  std::string id;
  std::string description;
  bool passed = true;
  long cells_checked = 0;
  // First few failures, human readable; empty on success.
  std::vector<std::string> failures;

  void fail(std::string what) {
    passed = false;
    if (failures.size() < kMaxListedFailures) failures.push_back(std::move(what));
  }

  static constexpr std::size_t kMaxListedFailures = 8;
};

/// A batch of checks plus free-form notes. Failures are data, not errors.
struct VerificationReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
  }

  void append(VerificationReport other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
    for (auto& n : other.notes) notes.push_back(std::move(n));
  }
};

}  // namespace splitperm
