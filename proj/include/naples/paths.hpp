#pragma once

#include <vector>

#include "naples/types.hpp"

namespace naples {

enum class Step { South, East };

/// Lattice path of 2n unit steps from (0, n) to (n, 0). South steps may
/// carry car labels: labels[j] belongs to the j-th south step in step order,
/// and consecutive south steps must carry increasing labels.
struct LatticePath {
  std::vector<Step> steps;
  std::vector<int> labels;  // one per south step when labeled, else empty

  int n() const { return static_cast<int>(steps.size()) / 2; }

  /// Vertices visited, starting at (0, n); n()+n()+1 points.
  std::vector<std::pair<int, int>> vertices() const;

  bool operator==(const LatticePath&) const = default;
};

/// True iff the path has n south and n east steps and never rises above the
/// line y = n - x + k at any vertex.
bool within_k_boundary(const LatticePath& path, int k);

/// The labeled path with one east step per column and u_i south steps in
/// column i, where u_i counts the cars preferring spot i; south steps are
/// labeled by those cars in increasing order. Throws NotAParkingFunction.
LatticePath pf_to_labeled_dyck(const ParkingPreference& pref);

/// Inverse of pf_to_labeled_dyck. Throws InvalidPath when the path is not a
/// labeled path weakly below y = n - x with increasing run labels.
ParkingPreference labeled_dyck_to_pf(const LatticePath& path);

/// For a weakly decreasing preference, whether a_i <= min(n, n - i + 1 + k)
/// holds at every i; equivalent to parking under the k-Naples rule.
/// Throws NotDecreasing for non-decreasing input.
bool decreasing_npf_check(const ParkingPreference& pref, NaplesParameter k);

/// The unlabeled path whose i-th east step runs at height a_i - 1. Defined
/// for weakly decreasing preferences passing decreasing_npf_check; the
/// result stays weakly below y = n - x + k and starts with a south step.
/// Throws NotDecreasing / NotAKNaplesParkingFunction.
LatticePath decreasing_to_klattice(const ParkingPreference& pref, NaplesParameter k);

/// Number of weakly decreasing k-Naples parking functions of length n,
/// equivalently of k-bounded paths of length 2n whose first step is south.
BigInt count_decreasing_npf(int n, NaplesParameter k);

}  // namespace naples
