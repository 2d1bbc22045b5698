#include <doctest.h>

#include <numeric>

#include "naples/core.hpp"
#include "naples/fibers.hpp"
#include "naples/oracle.hpp"
#include "naples/permutations.hpp"
#include "naples/qstats.hpp"

using namespace naples;

namespace {

QPolynomial poly(std::vector<long long> coeffs) {
  std::vector<BigInt> big(coeffs.begin(), coeffs.end());
  return QPolynomial(std::move(big));
}

ParkingPreference pref(std::vector<int> v) { return ParkingPreference(std::move(v)); }

long long inversions(const Permutation& sigma) {
  long long count = 0;
  for (int i = 1; i <= sigma.size(); ++i) {
    for (int j = i + 1; j <= sigma.size(); ++j) {
      if (sigma[i] > sigma[j]) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_SUITE("qstats") {

TEST_CASE("q_int") {
  CHECK(q_int(1) == poly({1}));
  CHECK(q_int(3) == poly({1, 1, 1}));
  CHECK(q_int(0).is_zero());
  CHECK(q_int(0).degree() == -1);
  CHECK(q_int(5).evaluate_at_one() == 5);
}

TEST_CASE("polynomial arithmetic") {
  CHECK(poly({1, 1}) * poly({1, 1, 1}) == poly({1, 2, 2, 1}));
  CHECK((poly({1, 2}) + poly({0, 0, 3})) == poly({1, 2, 3}));
  CHECK(poly({0, 0, 0}).is_zero());
  CHECK(poly({3, 0, 1}).coefficient(5) == 0);
  CHECK_THROWS_AS(QPolynomial({BigInt(-1)}), std::invalid_argument);
}

TEST_CASE("area examples") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> increasing(static_cast<size_t>(n));
    std::iota(increasing.begin(), increasing.end(), 1);
    CHECK(area(pref(increasing)) == 0);
    CHECK(area(pref(std::vector<int>(static_cast<size_t>(n), 1))) == n * (n - 1) / 2);
  }
  CHECK(area(pref({3, 3, 1, 4, 2, 2})) == 6);
  CHECK_THROWS_AS(area(pref({3, 2, 2})), NotAParkingFunction);
}

TEST_CASE("area is invariant under rearrangement") {
  const std::vector<std::vector<int>> arrangements = {
      {3, 3, 1, 4, 2, 2}, {1, 2, 2, 3, 3, 4}, {4, 3, 3, 2, 2, 1}, {2, 3, 4, 1, 2, 3}};
  for (const auto& a : arrangements) CHECK(area(pref(a)) == 6);
}

TEST_CASE("area_k examples") {
  CHECK(area_k(pref({3, 2, 2}), NaplesParameter(1)) == 1);
  CHECK(area_k(pref({2, 1, 1}), NaplesParameter(0)) == 2);
  CHECK_THROWS_AS(area_k(pref({3, 2, 2}), NaplesParameter(0)), NotAKNaplesParkingFunction);

  // On permutations area_k agrees with area for k = 0.
  for_each_permutation(5, [&](const std::vector<int>& one_line) {
    const ParkingPreference p(one_line);
    CHECK(area_k(p, NaplesParameter(0)) == area(p));
  });
}

TEST_CASE("fiber area polynomial examples") {
  CHECK(fiber_area_poly(Permutation({2, 3, 5, 1, 4}), NaplesParameter(0)) ==
        poly({1, 3, 4, 3, 1}));
  CHECK(fiber_area_poly(Permutation({5, 1, 4, 2, 3}), NaplesParameter(2)) ==
        poly({1, 2, 3, 2, 1}));
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> decreasing(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) decreasing[static_cast<size_t>(i)] = n - i;
    CHECK(fiber_area_poly(Permutation(decreasing), NaplesParameter(0)) == poly({1}));
  }
}

TEST_CASE("fiber polynomial equals the area_k histogram over the fiber") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      for_each_permutation(n, [&](const std::vector<int>& one_line) {
        const Permutation sigma(one_line);
        QPolynomial histogram;
        for (const ParkingPreference& p : fiber_members(sigma, NaplesParameter(k))) {
          const long long stat = area_k(p, NaplesParameter(k));
          std::vector<BigInt> mono(static_cast<size_t>(stat) + 1);
          mono.back() = 1;
          histogram += QPolynomial(std::move(mono));
        }
        CHECK(histogram == fiber_area_poly(sigma, NaplesParameter(k)));
      });
    }
  }
}

TEST_CASE("area distribution rows") {
  CHECK(area_distribution(2, NaplesParameter(0)) == poly({2, 1}));
  CHECK(area_distribution(3, NaplesParameter(1)) == poly({6, 9, 7, 2}));
  CHECK(area_distribution(4, NaplesParameter(3)) == poly({24, 48, 60, 64, 40, 16, 4}));
}

TEST_CASE("area distribution structure") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      const QPolynomial dist = area_distribution(n, NaplesParameter(k));
      CHECK(dist.evaluate_at_one() == count_npf_recursive(n, NaplesParameter(k)));
      CHECK(dist.degree() == n * (n - 1) / 2);
      BigInt nfact = 1;
      for (int i = 2; i <= n; ++i) nfact *= i;
      CHECK(dist.coefficient(0) == nfact);
    }
  }
  CHECK_THROWS_AS(area_distribution(11, NaplesParameter(0)), ResourceLimit);
}

TEST_CASE("qt distribution") {
  const auto zero_stat = [](const Permutation&) -> long long { return 0; };
  for (int n = 1; n <= 4; ++n) {
    const QtPolynomial joint = qt_distribution(n, zero_stat);
    CHECK(joint.q_marginal() == area_distribution(n, NaplesParameter(0)));
    for (const auto& [key, coeff] : joint.terms) CHECK(key.second == 0);
  }

  const QtPolynomial single = qt_distribution(1, inversions);
  CHECK(single.terms.size() == 1);
  CHECK(single.terms.at({0, 0}) == 1);

  const QtPolynomial joint3 = qt_distribution(3, inversions);
  CHECK(joint3.q_marginal() == poly({6, 6, 3, 1}));
  // Brute-force cross-check: group preferences by area and outcome inversions.
  QtPolynomial expected;
  for_each_preference(3, [&](const ParkingPreference& p) {
    auto sigma = phi_k(p, NaplesParameter(0));
    if (!sigma) return;
    expected.add_term(static_cast<int>(area(p)), inversions(*sigma), 1);
  });
  CHECK(joint3 == expected);
}

}  // TEST_SUITE
