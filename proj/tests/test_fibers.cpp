#include <doctest.h>

#include <algorithm>
#include <set>

#include "naples/core.hpp"
#include "naples/fibers.hpp"
#include "naples/oracle.hpp"
#include "naples/permutations.hpp"

using namespace naples;

namespace {

std::vector<std::vector<int>> member_values(const Permutation& sigma, int k) {
  std::vector<std::vector<int>> out;
  for (const ParkingPreference& p : fiber_members(sigma, NaplesParameter(k))) {
    out.push_back(p.values());
  }
  return out;
}

}  // namespace

TEST_SUITE("fibers") {

TEST_CASE("ell examples") {
  const Permutation sigma({2, 3, 5, 1, 4});
  CHECK(ell(1, sigma) == 1);
  CHECK(ell(2, sigma) == 2);
  CHECK(ell(3, sigma) == 3);
  CHECK(ell(4, sigma) == 1);
  CHECK(ell(5, sigma) == 2);
  CHECK_THROWS_AS(ell(0, sigma), std::out_of_range);
  CHECK_THROWS_AS(ell(6, sigma), std::out_of_range);

  for (int n = 1; n <= 6; ++n) {
    const Permutation id = Permutation::identity(n);
    for (int i = 1; i <= n; ++i) CHECK(ell(i, id) == i);
  }
}

TEST_CASE("ell_profile examples") {
  const EllProfile p = ell_profile(Permutation({5, 1, 4, 2, 3}), NaplesParameter(2));
  CHECK(p.x == std::vector<int>{0, 0, 1, 0, 1});
  CHECK(p.y == std::vector<int>{3, 1, 3, 1, 1});
  CHECK(p.ell_k == std::vector<int>{3, 1, 3, 1, 1});

  const EllProfile q = ell_profile(Permutation({2, 3, 5, 1, 4}), NaplesParameter(0));
  CHECK(q.ell_k == std::vector<int>{1, 2, 3, 1, 2});
}

TEST_CASE("ell_profile reduces to ell at k = 0") {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const std::vector<int>& one_line) {
      const Permutation sigma(one_line);
      const EllProfile p = ell_profile(sigma, NaplesParameter(0));
      for (int i = 1; i <= n; ++i) {
        CHECK(p.ell_k[static_cast<size_t>(i) - 1] == ell(i, sigma));
      }
    });
  }
}

TEST_CASE("profile bounds and reversal reformulation") {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const std::vector<int>& one_line) {
      const Permutation sigma(one_line);
      for (int k = 0; k <= n; ++k) {
        const EllProfile p = ell_profile(sigma, NaplesParameter(k));
        for (int i = 1; i <= n; ++i) {
          const size_t idx = static_cast<size_t>(i) - 1;
          CHECK(p.x[idx] >= 0);
          CHECK(p.x[idx] <= i - 1);
          CHECK(p.y[idx] >= 1);
          CHECK(p.y[idx] <= std::min(k + 1, n - i + 1));
          CHECK(p.ell_k[idx] >= 1);
          // Entries of a permutation are distinct, so the strict left run is
          // the weak one shorn of its endpoint, and the bounded right run is
          // the unbounded one clipped to the window.
          CHECK(p.x[idx] == ell(i, sigma) - 1);
          CHECK(p.y[idx] == std::min(k + 1, ell_rev(i, sigma)));
        }
      }
    });
  }
}

TEST_CASE("fiber_size examples") {
  CHECK(fiber_size(Permutation({2, 3, 5, 1, 4}), NaplesParameter(0)) == 12);
  CHECK(fiber_size(Permutation({5, 1, 4, 2, 3}), NaplesParameter(2)) == 9);
  for (int n = 1; n <= 8; ++n) {
    BigInt nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    CHECK(fiber_size(Permutation::identity(n), NaplesParameter(0)) == nfact);
  }
}

TEST_CASE("fiber members match the worked examples") {
  const auto m0 = member_values(Permutation({2, 3, 5, 1, 4}), 0);
  const std::vector<std::vector<int>> expected0 = {
      {4, 1, 1, 4, 1}, {4, 1, 1, 4, 2}, {4, 1, 1, 4, 3}, {4, 1, 1, 5, 1},
      {4, 1, 1, 5, 2}, {4, 1, 1, 5, 3}, {4, 1, 2, 4, 1}, {4, 1, 2, 4, 2},
      {4, 1, 2, 4, 3}, {4, 1, 2, 5, 1}, {4, 1, 2, 5, 2}, {4, 1, 2, 5, 3}};
  CHECK(m0 == expected0);

  const auto m2 = member_values(Permutation({5, 1, 4, 2, 3}), 2);
  const std::vector<std::vector<int>> expected2 = {
      {2, 4, 5, 3, 1}, {2, 4, 5, 3, 2}, {2, 4, 5, 3, 3},
      {2, 4, 5, 4, 1}, {2, 4, 5, 4, 2}, {2, 4, 5, 4, 3},
      {2, 4, 5, 5, 1}, {2, 4, 5, 5, 2}, {2, 4, 5, 5, 3}};
  CHECK(m2 == expected2);

  const auto m1 = member_values(Permutation({1, 2, 3}), 0);
  const std::vector<std::vector<int>> expected1 = {{1, 1, 1}, {1, 1, 2}, {1, 1, 3},
                                                   {1, 2, 1}, {1, 2, 2}, {1, 2, 3}};
  CHECK(m1 == expected1);
}

TEST_CASE("fiber members agree with the exhaustive oracle") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      auto groups = oracle_fibers(n, NaplesParameter(k));
      BigInt total = 0;
      for_each_permutation(n, [&](const std::vector<int>& one_line) {
        const Permutation sigma(one_line);
        const auto members = fiber_members(sigma, NaplesParameter(k)).to_vector();
        auto it = groups.find(sigma);
        REQUIRE(it != groups.end());
        CHECK(members == it->second);
        CHECK(fiber_size(sigma, NaplesParameter(k)) == BigInt(members.size()));
        total += members.size();
      });
      // Fibers partition the k-Naples preferences.
      BigInt parked = 0;
      for_each_preference(n, [&](const ParkingPreference& p) {
        if (is_naples_pf(p, NaplesParameter(k))) ++parked;
      });
      CHECK(total == parked);
    }
  }
}

TEST_CASE("every member maps back to its permutation") {
  for_each_permutation(5, [&](const std::vector<int>& one_line) {
    const Permutation sigma(one_line);
    for (int k : {0, 1, 3}) {
      for (const ParkingPreference& p : fiber_members(sigma, NaplesParameter(k))) {
        auto result = phi_k(p, NaplesParameter(k));
        REQUIRE(result.ok());
        CHECK(*result == sigma);
      }
    }
  });
}

TEST_CASE("admissible set sizes match the profile") {
  for_each_permutation(6, [&](const std::vector<int>& one_line) {
    const Permutation sigma(one_line);
    const NaplesParameter k(2);
    const AdmissibleSets sets = admissible_sets(sigma, k);
    const EllProfile profile = ell_profile(sigma, k);
    const Permutation pi = sigma.inverse();
    for (int car = 1; car <= 6; ++car) {
      const int spot = pi[car];
      CHECK(static_cast<int>(sets.sets[static_cast<size_t>(car) - 1].size()) ==
            profile.ell_k[static_cast<size_t>(spot) - 1]);
    }
  });
}

}  // TEST_SUITE
