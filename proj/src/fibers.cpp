#include "naples/fibers.hpp"

#include <algorithm>
#include <numeric>

namespace naples {

namespace {

void check_position(int i, const Permutation& sigma) {
  if (i < 1 || i > sigma.size()) {
    throw std::out_of_range("position outside [1, n]");
  }
}

}  // namespace

int ell(int i, const Permutation& sigma) {
  check_position(i, sigma);
  int length = 1;
  for (int t = i - 1; t >= 1 && sigma[t] <= sigma[i]; --t) ++length;
  return length;
}

int ell_rev(int i, const Permutation& sigma) {
  check_position(i, sigma);
  int length = 1;
  for (int t = i + 1; t <= sigma.size() && sigma[t] <= sigma[i]; ++t) ++length;
  return length;
}

EllProfile ell_profile(const Permutation& sigma, NaplesParameter k) {
  const int n = sigma.size();
  EllProfile profile{sigma, k, {}, {}, {}};
  profile.x.reserve(static_cast<size_t>(n));
  profile.y.reserve(static_cast<size_t>(n));
  profile.ell_k.reserve(static_cast<size_t>(n));

  for (int i = 1; i <= n; ++i) {
    int x = 0;
    for (int t = i - 1; t >= 1 && sigma[t] < sigma[i]; --t) ++x;

    int y = 1;
    for (int t = i + 1; t <= std::min(n, i + k.k) && sigma[t] <= sigma[i]; ++t) ++y;

    const int ell_k = (x == i - 1) ? x + y : std::max(x - k.k, 0) + y;
    profile.x.push_back(x);
    profile.y.push_back(y);
    profile.ell_k.push_back(ell_k);
  }
  return profile;
}

BigInt fiber_size(const Permutation& sigma, NaplesParameter k) {
  const EllProfile profile = ell_profile(sigma, k);
  BigInt product = 1;
  for (int v : profile.ell_k) product *= v;
  return product;
}

AdmissibleSets admissible_sets(const Permutation& sigma, NaplesParameter k) {
  const int n = sigma.size();
  const EllProfile profile = ell_profile(sigma, k);
  const Permutation pi = sigma.inverse();

  AdmissibleSets result;
  result.sets.resize(static_cast<size_t>(n));
  for (int car = 1; car <= n; ++car) {
    const int spot = pi[car];
    const int x = profile.x[static_cast<size_t>(spot) - 1];
    const int y = profile.y[static_cast<size_t>(spot) - 1];

    std::vector<int>& set = result.sets[static_cast<size_t>(car) - 1];
    // Preferences behind the spot. When the run of smaller entries reaches
    // the street start there is no empty spot to back into, so every spot in
    // the run works; otherwise the empty spot at position spot-x-1 must fall
    // strictly outside the backup window, leaving only the x-k largest.
    const int run_start = spot - x;
    const int from = (x == spot - 1) ? run_start : run_start + k.k;
    for (int a = from; a <= spot - 1; ++a) set.push_back(a);
    // The spot itself and the occupied stretch reachable by backing up.
    for (int a = spot; a <= spot + y - 1; ++a) set.push_back(a);
  }
  return result;
}

FiberMembers::FiberMembers(Permutation sigma, NaplesParameter k)
    : sigma_(std::move(sigma)), k_(k), sets_(admissible_sets(sigma_, k_)) {}

ParkingPreference FiberMembers::iterator::operator*() const {
  std::vector<int> prefs;
  prefs.reserve(indices_.size());
  for (size_t i = 0; i < indices_.size(); ++i) {
    prefs.push_back(sets_->sets[i][indices_[i]]);
  }
  return ParkingPreference(std::move(prefs));
}

FiberMembers::iterator& FiberMembers::iterator::operator++() {
  // Mixed-radix odometer, last coordinate fastest: lexicographic order.
  size_t pos = indices_.size();
  while (pos > 0) {
    --pos;
    if (++indices_[pos] < sets_->sets[pos].size()) return *this;
    indices_[pos] = 0;
  }
  done_ = true;
  return *this;
}

FiberMembers::iterator FiberMembers::iterator::operator++(int) {
  iterator copy = *this;
  ++*this;
  return copy;
}

bool FiberMembers::iterator::operator==(const iterator& other) const {
  if (done_ != other.done_) return false;
  return done_ || indices_ == other.indices_;
}

BigInt FiberMembers::size() const {
  BigInt product = 1;
  for (const auto& set : sets_.sets) product *= set.size();
  return product;
}

std::vector<ParkingPreference> FiberMembers::to_vector() const {
  std::vector<ParkingPreference> members;
  for (const ParkingPreference& p : *this) members.push_back(p);
  return members;
}

FiberMembers fiber_members(const Permutation& sigma, NaplesParameter k) {
  return FiberMembers(sigma, k);
}

}  // namespace naples
