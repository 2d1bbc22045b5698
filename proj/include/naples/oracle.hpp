#pragma once

#include <functional>
#include <map>
#include <vector>

#include "naples/types.hpp"

namespace naples {

/// Default cap for operations that enumerate all n^n preference tuples.
inline constexpr int kDefaultOracleCeiling = 8;

/// Visits every preference tuple in [n]^n in lexicographic order.
void for_each_preference(int n, const std::function<void(const ParkingPreference&)>& visit);

/// Exhaustive ground truth: simulates every tuple in [n]^n and groups the
/// successes by outcome permutation. Member lists are in lexicographic
/// order. Refuses n above `ceiling` (ResourceLimit).
std::map<Permutation, std::vector<ParkingPreference>> oracle_fibers(
    int n, NaplesParameter k, int ceiling = kDefaultOracleCeiling);

}  // namespace naples
