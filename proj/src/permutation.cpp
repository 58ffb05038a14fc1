#include "splitperm/permutation.hpp"

#include <charconv>
#include <stdexcept>

namespace splitperm {

namespace {

void require_position(const Permutation& w, int r, const char* what) {
  if (r < 0 || r > w.size()) {
    throw std::out_of_range(std::string(what) + ": position " +
                            std::to_string(r) + " outside [0," +
                            std::to_string(w.size()) + "]");
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("permutation value " + std::to_string(v) +
                                  " outside [1," + std::to_string(n) + "]");
    }
    if (seen[v]) {
      throw std::invalid_argument("duplicate value " + std::to_string(v) +
                                  " in permutation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[k] = k + 1;
  return Permutation(std::move(v));
}

int Permutation::operator()(int k) const {
  if (k < 1 || k > size()) {
    throw std::out_of_range("w(" + std::to_string(k) + ") undefined for n=" +
                            std::to_string(size()));
  }
  return values_[k - 1];
}

int Permutation::position_of(int v) const {
  for (int k = 0; k < size(); ++k) {
    if (values_[k] == v) return k + 1;
  }
  throw std::out_of_range("value " + std::to_string(v) + " not in permutation");
}

Permutation make_permutation(std::vector<int> values) {
  return Permutation(std::move(values));
}

Permutation parse_permutation(std::string_view text) {
  text = trim(text);
  std::vector<int> values;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed permutation text: '" +
                                    std::string(text) + "'");
      }
      values.push_back(c - '0');
    }
  } else {
    while (true) {
      auto comma = text.find(',');
      auto field = trim(text.substr(0, comma));
      int v = 0;
      auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (field.empty() || ec != std::errc() || end != field.data() + field.size()) {
        throw std::invalid_argument("malformed permutation entry: '" +
                                    std::string(field) + "'");
      }
      values.push_back(v);
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
  }
  return Permutation(std::move(values));
}

std::string to_string(const Permutation& w) {
  std::string out;
  const bool compact = w.size() <= 9;
  for (int k = 1; k <= w.size(); ++k) {
    if (!compact && k > 1) out += ',';
    out += std::to_string(w(k));
  }
  return out;
}

std::set<int> left_set(const Permutation& w, int r) {
  require_position(w, r, "left_set");
  return {w.values().begin(), w.values().begin() + r};
}

std::set<int> right_set(const Permutation& w, int r) {
  require_position(w, r, "right_set");
  return {w.values().begin() + r, w.values().end()};
}

Permutation remove_max(const Permutation& w) {
  if (w.empty()) throw std::invalid_argument("remove_max: empty permutation");
  std::vector<int> out;
  out.reserve(w.size() - 1);
  for (int v : w.values()) {
    if (v != w.size()) out.push_back(v);
  }
  return Permutation(std::move(out));
}

Permutation insert_max(const Permutation& w, int pos) {
  const int n = w.size() + 1;
  if (pos < 1 || pos > n) {
    throw std::out_of_range("insert_max: position " + std::to_string(pos) +
                            " outside [1," + std::to_string(n) + "]");
  }
  std::vector<int> out(w.values().begin(), w.values().end());
  out.insert(out.begin() + (pos - 1), n);
  return Permutation(std::move(out));
}

Permutation rotate180(const Permutation& w) {
  const int n = w.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out[k - 1] = n + 1 - w(n + 1 - k);
  return Permutation(std::move(out));
}

int rank_function(const Permutation& w, int i, int j) {
  if (i < 0 || i > w.size() || j < 0 || j > w.size()) {
    throw std::out_of_range("rank_function: bounds outside [0," +
                            std::to_string(w.size()) + "]");
  }
  int count = 0;
  for (int k = 1; k <= j; ++k) {
    if (w(k) <= i) ++count;
  }
  return count;
}

}  // namespace splitperm
