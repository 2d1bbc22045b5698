#include "naples/qstats.hpp"

#include <algorithm>

#include "naples/core.hpp"
#include "naples/fibers.hpp"
#include "naples/permutations.hpp"

namespace naples {

QPolynomial::QPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
  for (const BigInt& c : coeffs_) {
    if (c < 0) throw std::invalid_argument("coefficients must be non-negative");
  }
  normalize();
}

void QPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coefficient(int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[static_cast<size_t>(exponent)];
}

BigInt QPolynomial::evaluate_at_one() const {
  BigInt total = 0;
  for (const BigInt& c : coeffs_) total += c;
  return total;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (size_t e = 0; e < other.coeffs_.size(); ++e) coeffs_[e] += other.coeffs_[e];
  normalize();
  return *this;
}

QPolynomial QPolynomial::operator*(const QPolynomial& other) const {
  if (is_zero() || other.is_zero()) return QPolynomial();
  std::vector<BigInt> result(coeffs_.size() + other.coeffs_.size() - 1);
  for (size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (size_t b = 0; b < other.coeffs_.size(); ++b) {
      result[a + b] += coeffs_[a] * other.coeffs_[b];
    }
  }
  return QPolynomial(std::move(result));
}

void QtPolynomial::add_term(int q_exp, long long t_exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto key = std::make_pair(q_exp, t_exp);
  auto it = terms.find(key);
  if (it == terms.end()) {
    terms.emplace(key, coeff);
  } else {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

QPolynomial QtPolynomial::q_marginal() const {
  QPolynomial total;
  for (const auto& [key, coeff] : terms) {
    std::vector<BigInt> mono(static_cast<size_t>(key.first) + 1);
    mono.back() = coeff;
    total += QPolynomial(std::move(mono));
  }
  return total;
}

QPolynomial q_int(int m) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  return QPolynomial(std::vector<BigInt>(static_cast<size_t>(m), 1));
}

long long area(const ParkingPreference& pref) {
  if (!is_naples_pf(pref, NaplesParameter(0))) {
    throw NotAParkingFunction("preference is not a parking function");
  }
  const int n = pref.size();
  long long total = 0;
  for (int i = 1; i <= n; ++i) total += n - i - pref[i] + 1;
  return total;
}

long long area_k(const ParkingPreference& pref, NaplesParameter k) {
  auto outcome = phi_k(pref, k);
  if (!outcome) {
    throw NotAKNaplesParkingFunction("preference does not park with backup distance " +
                                     std::to_string(k.k));
  }
  const EllProfile profile = ell_profile(*outcome, k);
  const int n = pref.size();
  long long total = 0;
  for (int i = 1; i <= n; ++i) {
    total += n - i + profile.y[static_cast<size_t>(i) - 1] - pref[i];
  }
  return total;
}

QPolynomial fiber_area_poly(const Permutation& sigma, NaplesParameter k) {
  const EllProfile profile = ell_profile(sigma, k);
  QPolynomial product = QPolynomial::one();
  for (int len : profile.ell_k) product = product * q_int(len);
  return product;
}

QPolynomial area_distribution(int n, NaplesParameter k, int threads, int ceiling) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > ceiling) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the permutation-iteration ceiling " +
                        std::to_string(ceiling));
  }
  return reduce_over_permutations<QPolynomial>(
      n, threads, QPolynomial{},
      [k](QPolynomial& acc, const std::vector<int>& one_line) {
        acc += fiber_area_poly(Permutation(one_line), k);
      },
      [](QPolynomial& acc, QPolynomial&& partial) { acc += partial; });
}

QtPolynomial qt_distribution(int n, const std::function<long long(const Permutation&)>& stat,
                             NaplesParameter k, int ceiling) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > ceiling) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the permutation-iteration ceiling " +
                        std::to_string(ceiling));
  }
  QtPolynomial total;
  for_each_permutation(n, [&](const std::vector<int>& one_line) {
    const Permutation sigma(one_line);
    const long long t_exp = stat(sigma);
    if (t_exp < 0) throw std::invalid_argument("statistic values must be non-negative");
    const QPolynomial fiber = fiber_area_poly(sigma, k);
    for (int e = 0; e <= fiber.degree(); ++e) {
      total.add_term(e, t_exp, fiber.coefficient(e));
    }
  });
  return total;
}

}  // namespace naples
