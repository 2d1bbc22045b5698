#include "naples/types.hpp"

#include <algorithm>

namespace naples {

Permutation::Permutation(std::vector<int> one_line) : values_(std::move(one_line)) {
  const int n = static_cast<int>(values_.size());
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1..n");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int i = 1; i <= size(); ++i) {
    inv[static_cast<size_t>((*this)[i]) - 1] = i;
  }
  return Permutation(std::move(inv));
}

ParkingPreference::ParkingPreference(std::vector<int> prefs) : prefs_(std::move(prefs)) {
  const int n = static_cast<int>(prefs_.size());
  if (n == 0) throw std::invalid_argument("preference tuple must be non-empty");
  for (int a : prefs_) {
    if (a < 1 || a > n) {
      throw std::invalid_argument("preference entries must lie in [1, n]");
    }
  }
}

bool ParkingPreference::weakly_decreasing() const {
  return std::is_sorted(prefs_.rbegin(), prefs_.rend());
}

namespace {

void write_sequence(std::ostream& os, const std::vector<int>& values) {
  // Compact digit string up to n = 9, comma-separated beyond.
  bool compact = values.size() <= 9;
  for (size_t i = 0; i < values.size(); ++i) {
    if (!compact && i > 0) os << ',';
    os << values[i];
  }
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Permutation& sigma) {
  write_sequence(os, sigma.values());
  return os;
}

std::ostream& operator<<(std::ostream& os, const ParkingPreference& pref) {
  write_sequence(os, pref.values());
  return os;
}

}  // namespace naples
