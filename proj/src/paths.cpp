#include "naples/paths.hpp"

#include <algorithm>
#include <numeric>

#include "naples/core.hpp"

namespace naples {

std::vector<std::pair<int, int>> LatticePath::vertices() const {
  std::vector<std::pair<int, int>> points;
  points.reserve(steps.size() + 1);
  int x = 0;
  int y = n();
  points.emplace_back(x, y);
  for (Step s : steps) {
    if (s == Step::South) {
      --y;
    } else {
      ++x;
    }
    points.emplace_back(x, y);
  }
  return points;
}

bool within_k_boundary(const LatticePath& path, int k) {
  const int n = path.n();
  const auto south_total = static_cast<int>(
      std::count(path.steps.begin(), path.steps.end(), Step::South));
  if (static_cast<int>(path.steps.size()) != 2 * n || south_total != n) return false;
  for (const auto& [x, y] : path.vertices()) {
    if (y > n - x + k) return false;
  }
  return true;
}

LatticePath pf_to_labeled_dyck(const ParkingPreference& pref) {
  if (!is_naples_pf(pref, NaplesParameter(0))) {
    throw NotAParkingFunction("preference is not a parking function");
  }
  const int n = pref.size();
  // Cars preferring each spot, ascending; these label the column's south run.
  std::vector<std::vector<int>> cars_by_spot(static_cast<size_t>(n) + 1);
  for (int car = 1; car <= n; ++car) cars_by_spot[static_cast<size_t>(pref[car])].push_back(car);

  LatticePath path;
  path.steps.reserve(static_cast<size_t>(2 * n));
  for (int spot = 1; spot <= n; ++spot) {
    for (int car : cars_by_spot[static_cast<size_t>(spot)]) {
      path.steps.push_back(Step::South);
      path.labels.push_back(car);
    }
    path.steps.push_back(Step::East);
  }
  return path;
}

ParkingPreference labeled_dyck_to_pf(const LatticePath& path) {
  const int n = path.n();
  if (n < 1 || !within_k_boundary(path, 0)) {
    throw InvalidPath("not a path weakly below y = n - x");
  }
  if (static_cast<int>(path.labels.size()) != n) {
    throw InvalidPath("expected one label per south step");
  }
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int label : path.labels) {
    if (label < 1 || label > n || seen[static_cast<size_t>(label)]) {
      throw InvalidPath("labels must be a bijection to 1..n");
    }
    seen[static_cast<size_t>(label)] = true;
  }

  std::vector<int> prefs(static_cast<size_t>(n));
  int column = 1;
  size_t south_index = 0;
  int previous_label = 0;
  bool in_run = false;
  for (Step s : path.steps) {
    if (s == Step::East) {
      ++column;
      in_run = false;
      continue;
    }
    const int label = path.labels[south_index++];
    if (in_run && label <= previous_label) {
      throw InvalidPath("consecutive south steps must carry increasing labels");
    }
    in_run = true;
    previous_label = label;
    prefs[static_cast<size_t>(label) - 1] = column;
  }
  return ParkingPreference(std::move(prefs));
}

bool decreasing_npf_check(const ParkingPreference& pref, NaplesParameter k) {
  if (!pref.weakly_decreasing()) {
    throw NotDecreasing("preference must be weakly decreasing");
  }
  const int n = pref.size();
  for (int i = 1; i <= n; ++i) {
    if (pref[i] > std::min(n, n - i + 1 + k.k)) return false;
  }
  return true;
}

LatticePath decreasing_to_klattice(const ParkingPreference& pref, NaplesParameter k) {
  if (!decreasing_npf_check(pref, k)) {
    throw NotAKNaplesParkingFunction("preference fails the decreasing height bound");
  }
  const int n = pref.size();
  LatticePath path;
  path.steps.reserve(static_cast<size_t>(2 * n));
  int height = n;
  for (int i = 1; i <= n; ++i) {
    while (height > pref[i] - 1) {
      path.steps.push_back(Step::South);
      --height;
    }
    path.steps.push_back(Step::East);
  }
  while (height > 0) {
    path.steps.push_back(Step::South);
    --height;
  }
  return path;
}

BigInt count_decreasing_npf(int n, NaplesParameter k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  // Reversal turns the decreasing tuples into weakly increasing b with
  // b_i <= min(n, i + k); count those by prefix sums over the last value.
  std::vector<BigInt> current(static_cast<size_t>(n) + 1, 0);
  current[0] = 1;
  for (int i = 1; i <= n; ++i) {
    const int bound = std::min(n, i + k.k);
    std::vector<BigInt> next(static_cast<size_t>(n) + 1, 0);
    BigInt below = 0;
    for (int v = 0; v <= n; ++v) {
      below += current[static_cast<size_t>(v)];
      if (v >= 1 && v <= bound) next[static_cast<size_t>(v)] = below;
    }
    current = std::move(next);
  }
  return std::accumulate(current.begin(), current.end(), BigInt(0));
}

}  // namespace naples
