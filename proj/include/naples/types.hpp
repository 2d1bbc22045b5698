#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace naples {

/// Arbitrary-precision integer used for all exact counts and coefficients.
using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// An enumeration would exceed its configured size ceiling.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAParkingFunction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAKNaplesParkingFunction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotDecreasing : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class InvalidPath : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

/// A permutation of [1, n] in one-line notation. Entries are 1-based.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `one_line` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }

  /// Value at 1-based position i.
  int operator[](int i) const { return values_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& values() const { return values_; }

  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> values_;
};

/// A parking preference tuple (a_1, ..., a_n) with each a_i in [1, n].
class ParkingPreference {
 public:
  ParkingPreference() = default;

  /// Validates that every entry lies in [1, n] where n = prefs.size().
  explicit ParkingPreference(std::vector<int> prefs);

  int size() const { return static_cast<int>(prefs_.size()); }

  /// Preference of car i (1-based).
  int operator[](int i) const { return prefs_[static_cast<size_t>(i) - 1]; }

  const std::vector<int>& values() const { return prefs_; }

  bool weakly_decreasing() const;

  bool operator==(const ParkingPreference&) const = default;
  auto operator<=>(const ParkingPreference&) const = default;

 private:
  std::vector<int> prefs_;
};

/// Backup distance for the k-Naples parking rule. k = 0 is the classical
/// rule; any k >= n-1 behaves like k = n-1 (the whole street is reachable).
struct NaplesParameter {
  int k = 0;

  NaplesParameter() = default;
  explicit NaplesParameter(int backup) : k(backup) {
    if (backup < 0) throw std::invalid_argument("backup distance k must be >= 0");
  }
};

/// Result of parking all n cars: sigma maps spot -> car, pi maps car -> spot.
struct Outcome {
  Permutation sigma;
  Permutation pi;

  bool operator==(const Outcome&) const = default;
};

/// The first car that could not park (1-based).
struct FailedCar {
  int car = 0;
};

/// Value-or-failure result of running the parking rule. Failure carries the
/// index of the first car that found no spot.
template <typename T>
class ParkResult {
 public:
  ParkResult(T value) : value_(std::move(value)) {}
  ParkResult(FailedCar failure) : failure_(failure) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& operator*() const { return *value_; }
  const T* operator->() const { return &*value_; }

  /// Pre: !ok().
  FailedCar error() const { return *failure_; }

 private:
  std::optional<T> value_;
  std::optional<FailedCar> failure_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& sigma);
std::ostream& operator<<(std::ostream& os, const ParkingPreference& pref);

}  // namespace naples
