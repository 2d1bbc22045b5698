#pragma once

#include <map>

#include "naples/types.hpp"

namespace naples {

/// Default cap for operations that iterate all n! permutations.
inline constexpr int kDefaultEnumerationCeiling = 10;

/// Sparse series over positive integer indices with exact coefficients.
/// Zero terms are never stored. Serves two roles:
///   - fiber-size generating function: coefficient(i) counts permutations
///     whose fiber has size i;
///   - logarithmic generating function: index i stands for exponent ln i,
///     so multiplying terms multiplies indices.
class IndexedSeries {
 public:
  IndexedSeries() = default;

  void add_term(const BigInt& index, const BigInt& coefficient);

  BigInt coefficient(const BigInt& index) const;
  const std::map<BigInt, BigInt>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  BigInt coefficient_sum() const;
  /// Sum of index * coefficient over all terms.
  BigInt weighted_sum() const;

  IndexedSeries& operator+=(const IndexedSeries& other);
  friend IndexedSeries operator+(IndexedSeries lhs, const IndexedSeries& rhs) {
    lhs += rhs;
    return lhs;
  }

  /// Term-by-term product in the multiplicative-index sense:
  /// (a q^{ln i})(b q^{ln j}) = ab q^{ln ij}.
  IndexedSeries product(const IndexedSeries& other) const;

  /// Multiplies every index by m (the q^{ln m} shift).
  IndexedSeries scaled_indices(const BigInt& m) const;

  /// Multiplies every coefficient by c.
  IndexedSeries scaled(const BigInt& c) const;

  bool operator==(const IndexedSeries&) const = default;

 private:
  std::map<BigInt, BigInt> terms_;
};

/// (n+1)^(n-1), the closed-form count of parking functions of length n.
BigInt count_pf_closed(int n);

/// Count of k-Naples parking functions of length n by the recursion
/// over the position of the last car block. Memoized; exact.
BigInt count_npf_recursive(int n, NaplesParameter k);

/// Count of k-Naples parking functions as the sum of fiber sizes over all
/// n! permutations. Refuses n above `ceiling` (ResourceLimit).
BigInt count_npf_permsum(int n, NaplesParameter k, int threads = 0,
                         int ceiling = kDefaultEnumerationCeiling);

/// Histogram of fiber sizes over S_n for k = 0 (the series F_n).
IndexedSeries fiber_gf_direct(int n, int threads = 0,
                              int ceiling = kDefaultEnumerationCeiling);

/// Number of permutations of n whose fiber has size i, by the divisor-sum
/// recursion on the position of the largest entry. Memoized; exact.
BigInt c_coeff(int n, const BigInt& i);

/// F_n rebuilt from the coefficient recursion; indices run over the
/// divisors of n!.
IndexedSeries fiber_gf_recursive(int n);

/// The logarithmic generating function G_n, with index i carrying exponent
/// ln i, computed by its binomial recursion. Matches fiber_gf_direct(n)
/// term for term.
IndexedSeries log_gf(int n);

}  // namespace naples
