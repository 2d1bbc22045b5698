#include "naples/oracle.hpp"

#include <string>

#include "naples/core.hpp"

namespace naples {

void for_each_preference(int n, const std::function<void(const ParkingPreference&)>& visit) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<int> tuple(static_cast<size_t>(n), 1);
  while (true) {
    visit(ParkingPreference(tuple));
    size_t pos = tuple.size();
    while (pos > 0) {
      --pos;
      if (++tuple[pos] <= n) break;
      tuple[pos] = 1;
      if (pos == 0) return;
    }
  }
}

std::map<Permutation, std::vector<ParkingPreference>> oracle_fibers(int n, NaplesParameter k,
                                                                    int ceiling) {
  if (n > ceiling) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the preference-enumeration ceiling " +
                        std::to_string(ceiling));
  }
  std::map<Permutation, std::vector<ParkingPreference>> groups;
  for_each_preference(n, [&](const ParkingPreference& pref) {
    auto result = simulate(pref, k);
    if (result) groups[result->sigma].push_back(pref);
  });
  return groups;
}

}  // namespace naples
