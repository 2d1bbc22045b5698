#include "naples/core.hpp"

#include <algorithm>

namespace naples {

ParkResult<Outcome> simulate(const ParkingPreference& pref, NaplesParameter k) {
  const int n = pref.size();
  std::vector<bool> occupied(static_cast<size_t>(n) + 1, false);
  std::vector<int> sigma(static_cast<size_t>(n));  // spot -> car
  std::vector<int> pi(static_cast<size_t>(n));     // car -> spot

  for (int car = 1; car <= n; ++car) {
    const int a = pref[car];
    int spot = 0;
    if (!occupied[static_cast<size_t>(a)]) {
      spot = a;
    } else {
      // Back up through a-1, a-2, ..., max(1, a-k), nearest first.
      const int lowest = std::max(1, a - k.k);
      for (int s = a - 1; s >= lowest; --s) {
        if (!occupied[static_cast<size_t>(s)]) {
          spot = s;
          break;
        }
      }
      if (spot == 0) {
        for (int s = a + 1; s <= n; ++s) {
          if (!occupied[static_cast<size_t>(s)]) {
            spot = s;
            break;
          }
        }
      }
    }
    if (spot == 0) return FailedCar{car};
    occupied[static_cast<size_t>(spot)] = true;
    sigma[static_cast<size_t>(spot) - 1] = car;
    pi[static_cast<size_t>(car) - 1] = spot;
  }
  return Outcome{Permutation(std::move(sigma)), Permutation(std::move(pi))};
}

ParkResult<Permutation> phi_k(const ParkingPreference& pref, NaplesParameter k) {
  auto result = simulate(pref, k);
  if (!result) return result.error();
  return result->sigma;
}

bool is_naples_pf(const ParkingPreference& pref, NaplesParameter k) {
  return simulate(pref, k).ok();
}

}  // namespace naples
