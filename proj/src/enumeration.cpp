#include "naples/enumeration.hpp"

#include <mutex>
#include <utility>
#include <vector>

#include "naples/fibers.hpp"
#include "naples/permutations.hpp"

namespace naples {

namespace {

BigInt big_pow(const BigInt& base, int exponent) {
  if (exponent < 0) {
    // Only reachable as 1^(-1) in the counting recursion's last term.
    if (base != 1) throw std::invalid_argument("negative exponent");
    return 1;
  }
  BigInt result = 1;
  BigInt b = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    b *= b;
  }
  return result;
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n || n < 0) return 0;
  r = std::min(r, n - r);
  BigInt result = 1;
  for (int i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

BigInt factorial_big(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void check_ceiling(int n, int ceiling) {
  if (n > ceiling) {
    throw ResourceLimit("n = " + std::to_string(n) + " exceeds the permutation-iteration ceiling " +
                        std::to_string(ceiling));
  }
}

}  // namespace

void IndexedSeries::add_term(const BigInt& index, const BigInt& coefficient) {
  if (index < 1) throw std::invalid_argument("series indices must be >= 1");
  if (coefficient == 0) return;
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    terms_.emplace(index, coefficient);
  } else {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt IndexedSeries::coefficient(const BigInt& index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt IndexedSeries::coefficient_sum() const {
  BigInt total = 0;
  for (const auto& [index, coeff] : terms_) total += coeff;
  return total;
}

BigInt IndexedSeries::weighted_sum() const {
  BigInt total = 0;
  for (const auto& [index, coeff] : terms_) total += index * coeff;
  return total;
}

IndexedSeries& IndexedSeries::operator+=(const IndexedSeries& other) {
  for (const auto& [index, coeff] : other.terms_) add_term(index, coeff);
  return *this;
}

IndexedSeries IndexedSeries::product(const IndexedSeries& other) const {
  IndexedSeries result;
  for (const auto& [ia, ca] : terms_) {
    for (const auto& [ib, cb] : other.terms_) {
      result.add_term(ia * ib, ca * cb);
    }
  }
  return result;
}

IndexedSeries IndexedSeries::scaled_indices(const BigInt& m) const {
  IndexedSeries result;
  for (const auto& [index, coeff] : terms_) result.add_term(index * m, coeff);
  return result;
}

IndexedSeries IndexedSeries::scaled(const BigInt& c) const {
  IndexedSeries result;
  if (c == 0) return result;
  for (const auto& [index, coeff] : terms_) result.add_term(index, coeff * c);
  return result;
}

BigInt count_pf_closed(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return big_pow(n + 1, n - 1);
}

BigInt count_npf_recursive(int n, NaplesParameter k) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  static std::map<std::pair<int, int>, BigInt> memo;
  static std::mutex memo_mutex;

  std::scoped_lock lock(memo_mutex);
  auto rec = [&](auto&& self, int m) -> BigInt {
    if (m == 0) return 1;
    auto it = memo.find({m, k.k});
    if (it != memo.end()) return it->second;
    // Sum over i = number of cars parking before the street's last free run.
    const int top = m - 1;
    BigInt total = 0;
    for (int i = 0; i <= top; ++i) {
      total += binomial(top, i) * std::min(i + 1 + k.k, top + 1) * self(self, i) *
               big_pow(top - i + 1, top - i - 1);
    }
    memo.emplace(std::make_pair(m, k.k), total);
    return total;
  };
  return rec(rec, n);
}

BigInt count_npf_permsum(int n, NaplesParameter k, int threads, int ceiling) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  check_ceiling(n, ceiling);
  return reduce_over_permutations<BigInt>(
      n, threads, 0,
      [k](BigInt& acc, const std::vector<int>& one_line) {
        acc += fiber_size(Permutation(one_line), k);
      },
      [](BigInt& acc, BigInt&& partial) { acc += partial; });
}

IndexedSeries fiber_gf_direct(int n, int threads, int ceiling) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  check_ceiling(n, ceiling);
  return reduce_over_permutations<IndexedSeries>(
      n, threads, IndexedSeries{},
      [](IndexedSeries& acc, const std::vector<int>& one_line) {
        acc.add_term(fiber_size(Permutation(one_line), NaplesParameter(0)), 1);
      },
      [](IndexedSeries& acc, IndexedSeries&& partial) { acc += partial; });
}

BigInt c_coeff(int n, const BigInt& i) {
  if (i < 1) return 0;
  if (n < 0) return 0;
  if (n == 0) return i == 1 ? 1 : 0;

  static std::map<std::pair<int, BigInt>, BigInt> memo;
  static std::mutex memo_mutex;
  std::scoped_lock lock(memo_mutex);

  auto rec = [](auto&& self, int m, const BigInt& idx) -> BigInt {
    if (idx < 1 || m < 0) return 0;
    if (m == 0) return idx == 1 ? 1 : 0;
    auto it = memo.find({m, idx});
    if (it != memo.end()) return it->second;
    if (idx > factorial_big(m)) {
      memo.emplace(std::make_pair(m, idx), 0);
      return 0;
    }
    // Split at the position d of the largest entry; d must divide the fiber
    // size and the two flanks contribute a divisor pair of idx / d.
    BigInt total = 0;
    for (int d = 1; d <= m; ++d) {
      if (idx % d != 0) continue;
      const BigInt rest = idx / d;
      BigInt inner = 0;
      for (BigInt j = 1; j * j <= rest; ++j) {
        if (rest % j != 0) continue;
        inner += self(self, d - 1, j) * self(self, m - d, rest / j);
        const BigInt j2 = rest / j;
        if (j2 != j) {
          inner += self(self, d - 1, j2) * self(self, m - d, rest / j2);
        }
      }
      total += binomial(m - 1, d - 1) * inner;
    }
    memo.emplace(std::make_pair(m, idx), total);
    return total;
  };
  return rec(rec, n, i);
}

IndexedSeries fiber_gf_recursive(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  // Fiber sizes always divide n!, so only those indices can carry mass.
  const BigInt nfact = factorial_big(n);
  IndexedSeries series;
  for (BigInt d = 1; d * d <= nfact; ++d) {
    if (nfact % d != 0) continue;
    series.add_term(d, c_coeff(n, d));
    const BigInt d2 = nfact / d;
    if (d2 != d) series.add_term(d2, c_coeff(n, d2));
  }
  return series;
}

IndexedSeries log_gf(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  std::vector<IndexedSeries> g(static_cast<size_t>(n) + 1);
  g[0].add_term(1, 1);
  for (int m = 1; m <= n; ++m) {
    IndexedSeries total;
    for (int i = 0; i <= m - 1; ++i) {
      total += g[static_cast<size_t>(i)]
                   .product(g[static_cast<size_t>(m - 1 - i)])
                   .scaled_indices(i + 1)
                   .scaled(binomial(m - 1, i));
    }
    g[static_cast<size_t>(m)] = std::move(total);
  }
  return g[static_cast<size_t>(n)];
}

}  // namespace naples
