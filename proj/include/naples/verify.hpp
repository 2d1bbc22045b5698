#pragma once

#include <string>
#include <vector>

#include "naples/types.hpp"

namespace naples {

/// One cross-validation check over a parameter range. A failing check
/// carries the minimal counterexample: smallest n, then lexicographically
/// smallest offending input.
struct CheckResult {
  std::string name;
  std::string params;
  bool passed = true;
  std::string counterexample;
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
};

/// Cross-validates every identity the library implements, up to n_max:
/// constructive fibers against the exhaustive oracle, the three counting
/// routes against each other, both generating-function recursions against
/// the direct histogram, the fiber q-polynomials against area histograms,
/// the decreasing-tuple height bound against simulation, the labeled-path
/// round trips, and the frozen reference tables. n_max is capped at 8.
VerificationReport verify(int n_max, int threads = 0);

}  // namespace naples
