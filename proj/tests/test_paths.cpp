#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "naples/core.hpp"
#include "naples/enumeration.hpp"
#include "naples/oracle.hpp"
#include "naples/paths.hpp"
#include "naples/qstats.hpp"

using namespace naples;

namespace {

ParkingPreference pref(std::vector<int> v) { return ParkingPreference(std::move(v)); }

LatticePath path_of(const std::string& steps, std::vector<int> labels = {}) {
  LatticePath p;
  for (char c : steps) p.steps.push_back(c == 'S' ? Step::South : Step::East);
  p.labels = std::move(labels);
  return p;
}

// Complete unit squares strictly between the path and the line y = n - x:
// in the strip left of east step i, every square from the path up to the
// boundary height n - i counts.
long long squares_under_diagonal(const LatticePath& path) {
  long long total = 0;
  int east = 0;
  int y = path.n();
  for (Step s : path.steps) {
    if (s == Step::South) {
      --y;
    } else {
      ++east;
      total += std::max(0, path.n() - east - y);
    }
  }
  return total;
}

}  // namespace

TEST_SUITE("paths") {

TEST_CASE("labeled path of the six-car example") {
  const LatticePath path = pf_to_labeled_dyck(pref({3, 3, 1, 4, 2, 2}));
  CHECK(path == path_of("SESSESSESEEE", {3, 5, 6, 1, 2, 4}));
  CHECK(within_k_boundary(path, 0));
}

TEST_CASE("staircase and all-first extremes") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> increasing(static_cast<size_t>(n));
    std::iota(increasing.begin(), increasing.end(), 1);
    std::string staircase;
    std::vector<int> labels;
    for (int i = 1; i <= n; ++i) {
      staircase += "SE";
      labels.push_back(i);
    }
    CHECK(pf_to_labeled_dyck(pref(increasing)) == path_of(staircase, labels));

    std::string block(static_cast<size_t>(n), 'S');
    block += std::string(static_cast<size_t>(n), 'E');
    CHECK(pf_to_labeled_dyck(pref(std::vector<int>(static_cast<size_t>(n), 1))) ==
          path_of(block, labels));
  }
  CHECK_THROWS_AS(pf_to_labeled_dyck(pref({3, 2, 2})), NotAParkingFunction);
}

TEST_CASE("path back to preference") {
  CHECK(labeled_dyck_to_pf(path_of("SESSESSESEEE", {3, 5, 6, 1, 2, 4})) ==
        pref({3, 3, 1, 4, 2, 2}));
  CHECK(labeled_dyck_to_pf(path_of("SESE", {1, 2})) == pref({1, 2}));
  CHECK(labeled_dyck_to_pf(path_of("SSEE", {1, 2})) == pref({1, 1}));

  // Not a path below the boundary: east before any south.
  CHECK_THROWS_AS(labeled_dyck_to_pf(path_of("ESSE", {1, 2})), InvalidPath);
  // Labels out of order within a run.
  CHECK_THROWS_AS(labeled_dyck_to_pf(path_of("SSEE", {2, 1})), InvalidPath);
  // Labels not a bijection.
  CHECK_THROWS_AS(labeled_dyck_to_pf(path_of("SSEE", {1, 1})), InvalidPath);
  // Wrong label count.
  CHECK_THROWS_AS(labeled_dyck_to_pf(path_of("SSEE", {1})), InvalidPath);
}

TEST_CASE("round trip through labeled paths") {
  for (int n = 1; n <= 6; ++n) {
    auto groups = oracle_fibers(n, NaplesParameter(0));
    for (const auto& [sigma, members] : groups) {
      for (const ParkingPreference& p : members) {
        const LatticePath path = pf_to_labeled_dyck(p);
        CHECK(within_k_boundary(path, 0));
        CHECK(labeled_dyck_to_pf(path) == p);
        CHECK(squares_under_diagonal(path) == area(p));
      }
    }
  }
}

TEST_CASE("reverse round trip over all labeled paths") {
  // Enumerate labeled paths from scratch: every step sequence with n of
  // each step, filtered to the boundary, crossed with every increasing-run
  // labeling; each must survive decoding and re-encoding.
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> labels(static_cast<size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    std::vector<bool> choose_south(static_cast<size_t>(2 * n), false);
    std::fill(choose_south.begin(), choose_south.begin() + n, true);
    std::sort(choose_south.begin(), choose_south.end());
    int seen = 0;
    do {
      LatticePath shape;
      for (bool s : choose_south) shape.steps.push_back(s ? Step::South : Step::East);
      if (!within_k_boundary(shape, 0)) continue;
      std::vector<int> order = labels;
      do {
        LatticePath path = shape;
        path.labels = order;
        // Keep only labelings increasing within each south run.
        bool valid = true;
        size_t at = 0;
        int prev = 0;
        bool in_run = false;
        for (Step s : path.steps) {
          if (s == Step::East) {
            in_run = false;
            continue;
          }
          const int label = path.labels[at++];
          if (in_run && label <= prev) {
            valid = false;
            break;
          }
          in_run = true;
          prev = label;
        }
        if (!valid) continue;
        ++seen;
        const ParkingPreference decoded = labeled_dyck_to_pf(path);
        CHECK(pf_to_labeled_dyck(decoded) == path);
      } while (std::next_permutation(order.begin(), order.end()));
    } while (std::next_permutation(choose_south.begin(), choose_south.end()));
    // Labeled paths are in bijection with parking functions.
    CHECK(BigInt(seen) == count_pf_closed(n));
  }
}

TEST_CASE("decreasing height bound") {
  CHECK(decreasing_npf_check(pref({6, 6, 4, 4, 2, 2}), NaplesParameter(2)));
  CHECK(decreasing_npf_check(pref({3, 2, 2}), NaplesParameter(1)));
  for (int n = 2; n <= 5; ++n) {
    CHECK_FALSE(
        decreasing_npf_check(pref(std::vector<int>(static_cast<size_t>(n), n)), NaplesParameter(0)));
  }
  CHECK_THROWS_AS(decreasing_npf_check(pref({1, 2}), NaplesParameter(0)), NotDecreasing);
}

TEST_CASE("height bound agrees with simulation on decreasing tuples") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> t(static_cast<size_t>(n), 1);
    while (true) {
      if (std::is_sorted(t.rbegin(), t.rend())) {
        const ParkingPreference p(t);
        for (int k = 0; k <= n - 1; ++k) {
          CHECK(decreasing_npf_check(p, NaplesParameter(k)) == is_naples_pf(p, NaplesParameter(k)));
        }
      }
      size_t pos = t.size();
      bool done = false;
      while (pos > 0) {
        --pos;
        if (++t[pos] <= n) break;
        t[pos] = 1;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }
}

TEST_CASE("k-bounded path construction") {
  const LatticePath fig2 = decreasing_to_klattice(pref({6, 6, 4, 4, 2, 2}), NaplesParameter(2));
  CHECK(fig2 == path_of("SEESSEESSEES"));
  CHECK(within_k_boundary(fig2, 2));
  CHECK_FALSE(within_k_boundary(fig2, 0));
  CHECK(fig2.steps.front() == Step::South);

  for (int n = 1; n <= 5; ++n) {
    std::string block(static_cast<size_t>(n), 'S');
    block += std::string(static_cast<size_t>(n), 'E');
    CHECK(decreasing_to_klattice(pref(std::vector<int>(static_cast<size_t>(n), 1)),
                                 NaplesParameter(0)) == path_of(block));

    std::vector<int> staircase(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) staircase[static_cast<size_t>(i)] = n - i;
    std::string alt;
    for (int i = 0; i < n; ++i) alt += "SE";
    CHECK(decreasing_to_klattice(pref(staircase), NaplesParameter(0)) == path_of(alt));
  }

  CHECK_THROWS_AS(decreasing_to_klattice(pref({1, 2}), NaplesParameter(0)), NotDecreasing);
  CHECK_THROWS_AS(decreasing_to_klattice(pref({3, 3, 3}), NaplesParameter(0)),
                  NotAKNaplesParkingFunction);
}

TEST_CASE("east step heights encode the preferences") {
  const LatticePath path = decreasing_to_klattice(pref({5, 4, 4, 2, 1}), NaplesParameter(1));
  int east = 0;
  int y = 5;
  std::vector<int> heights;
  for (Step s : path.steps) {
    if (s == Step::South) {
      --y;
    } else {
      ++east;
      heights.push_back(y);
    }
  }
  CHECK(heights == std::vector<int>{4, 3, 3, 1, 0});
}

TEST_CASE("decreasing counts") {
  CHECK(count_decreasing_npf(1, NaplesParameter(0)) == 1);
  CHECK(count_decreasing_npf(3, NaplesParameter(0)) == 5);
  CHECK(count_decreasing_npf(3, NaplesParameter(2)) == 10);
  CHECK(count_decreasing_npf(4, NaplesParameter(1)) == 28);
  CHECK(count_decreasing_npf(5, NaplesParameter(3)) == 125);
  CHECK(count_decreasing_npf(6, NaplesParameter(2)) == 407);

  // Catalan numbers at k = 0.
  const std::vector<long long> catalan = {1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 7; ++n) {
    CHECK(count_decreasing_npf(n, NaplesParameter(0)) == catalan[static_cast<size_t>(n) - 1]);
  }

  // Against direct enumeration.
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      BigInt direct = 0;
      std::vector<int> t(static_cast<size_t>(n), 1);
      while (true) {
        if (std::is_sorted(t.rbegin(), t.rend()) &&
            decreasing_npf_check(ParkingPreference(t), NaplesParameter(k))) {
          ++direct;
        }
        size_t pos = t.size();
        bool done = false;
        while (pos > 0) {
          --pos;
          if (++t[pos] <= n) break;
          t[pos] = 1;
          if (pos == 0) done = true;
        }
        if (done) break;
      }
      CHECK(count_decreasing_npf(n, NaplesParameter(k)) == direct);
    }
  }
}

}  // TEST_SUITE
