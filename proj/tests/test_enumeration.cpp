#include <doctest.h>

#include "naples/enumeration.hpp"
#include "naples/fibers.hpp"
#include "naples/permutations.hpp"

using namespace naples;

namespace {

IndexedSeries series_of(std::initializer_list<std::pair<long long, long long>> terms) {
  IndexedSeries s;
  for (const auto& [index, coeff] : terms) s.add_term(index, coeff);
  return s;
}

}  // namespace

TEST_SUITE("enumeration") {

TEST_CASE("closed form") {
  CHECK(count_pf_closed(1) == 1);
  CHECK(count_pf_closed(3) == 16);
  CHECK(count_pf_closed(5) == 1296);
  // (n+1)^(n-1) outgrows 64 bits at n = 17; stays exact.
  CHECK(count_pf_closed(20) == BigInt("13248496640331026125580781"));
}

TEST_CASE("recursive count") {
  CHECK(count_npf_recursive(0, NaplesParameter(0)) == 1);
  CHECK(count_npf_recursive(3, NaplesParameter(0)) == 16);
  CHECK(count_npf_recursive(3, NaplesParameter(1)) == 24);
  CHECK(count_npf_recursive(4, NaplesParameter(1)) == 203);
}

TEST_CASE("permutation-sum count") {
  CHECK(count_npf_permsum(3, NaplesParameter(2)) == 27);
  CHECK(count_npf_permsum(5, NaplesParameter(0)) == 1296);
  CHECK(count_npf_permsum(4, NaplesParameter(2)) == 240);
  CHECK_THROWS_AS(count_npf_permsum(11, NaplesParameter(0)), ResourceLimit);
  // Ceiling override: n = 9 sits above a lowered ceiling.
  CHECK_THROWS_AS(count_npf_permsum(9, NaplesParameter(0), 0, 8), ResourceLimit);
  CHECK(count_npf_permsum(9, NaplesParameter(0), 0, 9) ==
        count_npf_recursive(9, NaplesParameter(0)));
}

TEST_CASE("three counting routes agree") {
  for (int n = 1; n <= 8; ++n) {
    const BigInt closed = count_pf_closed(n);
    CHECK(count_npf_recursive(n, NaplesParameter(0)) == closed);
    CHECK(count_npf_permsum(n, NaplesParameter(0)) == closed);
  }
  for (int n = 1; n <= 7; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      CHECK(count_npf_permsum(n, NaplesParameter(k)) ==
            count_npf_recursive(n, NaplesParameter(k)));
    }
    BigInt nn = 1;
    for (int i = 0; i < n; ++i) nn *= n;
    CHECK(count_npf_permsum(n, NaplesParameter(n - 1)) == nn);
  }
}

TEST_CASE("identical results for any thread count") {
  for (int threads : {1, 2, 3, 8}) {
    CHECK(count_npf_permsum(7, NaplesParameter(3), threads) == 717051);
    CHECK(fiber_gf_direct(6, threads) == fiber_gf_direct(6, 1));
  }
}

TEST_CASE("fiber-size histograms") {
  CHECK(fiber_gf_direct(1) == series_of({{1, 1}}));
  CHECK(fiber_gf_direct(3) == series_of({{1, 1}, {2, 3}, {3, 1}, {6, 1}}));

  const IndexedSeries f5 = fiber_gf_direct(5);
  CHECK(f5.terms().size() == 16);
  CHECK(f5.coefficient(120) == 1);
  CHECK(f5.coefficient(2) == 10);
  CHECK(f5.coefficient(7) == 0);

  for (int n = 1; n <= 6; ++n) {
    const IndexedSeries f = fiber_gf_direct(n);
    BigInt nfact = 1;
    for (int i = 2; i <= n; ++i) nfact *= i;
    CHECK(f.coefficient_sum() == nfact);
    CHECK(f.weighted_sum() == count_pf_closed(n));
    for (const auto& [index, coeff] : f.terms()) {
      CHECK(coeff > 0);
      CHECK(nfact % index == 0);
    }
  }
}

TEST_CASE("coefficient recursion") {
  CHECK(c_coeff(4, 24) == 1);
  CHECK(c_coeff(3, 4) == 0);
  CHECK(c_coeff(5, 12) == 15);
  CHECK(c_coeff(0, 1) == 1);
  CHECK(c_coeff(-2, 1) == 0);
  CHECK(c_coeff(3, 7) == 0);  // 7 does not divide 3! and exceeds it

  for (int n = 1; n <= 6; ++n) {
    CHECK(fiber_gf_recursive(n) == fiber_gf_direct(n));
  }
}

TEST_CASE("logarithmic generating function") {
  CHECK(log_gf(0) == series_of({{1, 1}}));
  CHECK(log_gf(2) == series_of({{1, 1}, {2, 1}}));
  CHECK(log_gf(4) == series_of({{1, 1}, {2, 6}, {3, 4}, {4, 4}, {6, 4}, {8, 3}, {12, 1}, {24, 1}}));
  for (int n = 1; n <= 6; ++n) {
    CHECK(log_gf(n) == fiber_gf_direct(n));
  }
}

TEST_CASE("series arithmetic") {
  IndexedSeries a = series_of({{2, 1}, {3, 2}});
  IndexedSeries b = series_of({{2, 5}});
  CHECK(a.product(b) == series_of({{4, 5}, {6, 10}}));
  CHECK(a.scaled_indices(3) == series_of({{6, 1}, {9, 2}}));
  CHECK(a.scaled(0) == IndexedSeries{});
  CHECK_THROWS_AS(a.add_term(0, 1), std::invalid_argument);
}

TEST_CASE("permutation unranking matches iteration order") {
  for (int n : {1, 3, 5}) {
    unsigned long long rank = 0;
    for_each_permutation(n, [&](const std::vector<int>& one_line) {
      CHECK(permutation_at_rank(n, rank) == one_line);
      ++rank;
    });
    CHECK(rank == factorial_u64(n));
  }
}

}  // TEST_SUITE
