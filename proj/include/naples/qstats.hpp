#pragma once

#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "naples/enumeration.hpp"
#include "naples/types.hpp"

namespace naples {

/// Polynomial in q with dense exact non-negative coefficients.
/// coefficient(e) is the coefficient of q^e; the representation never stores
/// trailing zeros, so degree() is -1 exactly for the zero polynomial.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coefficients);

  static QPolynomial one() { return QPolynomial({1}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coefficient(int exponent) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// Value at q = 1: the sum of the coefficients.
  BigInt evaluate_at_one() const;

  QPolynomial& operator+=(const QPolynomial& other);
  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  QPolynomial operator*(const QPolynomial& other) const;

  bool operator==(const QPolynomial&) const = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// Bivariate polynomial in q and t: exact coefficients keyed by
/// (q-exponent, t-exponent).
struct QtPolynomial {
  std::map<std::pair<int, long long>, BigInt> terms;

  void add_term(int q_exp, long long t_exp, const BigInt& coeff);
  /// Marginal in q obtained by setting t = 1.
  QPolynomial q_marginal() const;

  bool operator==(const QtPolynomial&) const = default;
};

/// [m]_q = 1 + q + ... + q^(m-1); the zero polynomial for m = 0.
QPolynomial q_int(int m);

/// The area statistic sum(n - i - a_i + 1) of a parking function.
/// Throws NotAParkingFunction if the preference does not park with k = 0.
long long area(const ParkingPreference& pref);

/// The backup-aware area statistic sum(n - i + y_k(i; sigma) - a_i) with
/// sigma the outcome of pref under the k-Naples rule. Equals area for k = 0.
/// Throws NotAKNaplesParkingFunction if the preference does not park.
long long area_k(const ParkingPreference& pref, NaplesParameter k);

/// Distribution of area_k over the fiber of sigma: the product of [ell_k]_q
/// over all positions.
QPolynomial fiber_area_poly(const Permutation& sigma, NaplesParameter k);

/// Distribution of area_k over all k-Naples parking functions of length n:
/// the sum of fiber_area_poly over S_n.
QPolynomial area_distribution(int n, NaplesParameter k, int threads = 0,
                              int ceiling = kDefaultEnumerationCeiling);

/// Joint distribution sum over sigma of t^stat(sigma) * fiber_area_poly:
/// at t = 1 this is area_distribution(n, k).
QtPolynomial qt_distribution(int n, const std::function<long long(const Permutation&)>& stat,
                             NaplesParameter k = NaplesParameter(0),
                             int ceiling = kDefaultEnumerationCeiling);

}  // namespace naples
