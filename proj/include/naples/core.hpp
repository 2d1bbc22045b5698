#pragma once

#include "naples/types.hpp"

namespace naples {

/// Runs the k-Naples parking rule. Cars are processed in order 1..n; car i
/// drives to its preferred spot a_i and parks there if it is free. Otherwise
/// it backs up one spot at a time through a_i-1, ..., max(1, a_i-k), parking
/// in the first free spot, and failing that drives forward from a_i+1 to n.
/// Succeeds iff every car parks.
ParkResult<Outcome> simulate(const ParkingPreference& pref, NaplesParameter k);

/// The outcome map: the permutation sigma with sigma[i] = car parked in
/// spot i, for a preference that parks under the k-Naples rule.
ParkResult<Permutation> phi_k(const ParkingPreference& pref, NaplesParameter k);

/// True iff every car parks under the k-Naples rule.
bool is_naples_pf(const ParkingPreference& pref, NaplesParameter k);

}  // namespace naples
