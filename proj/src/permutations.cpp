#include "naples/permutations.hpp"

namespace naples {

unsigned long long factorial_u64(int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (n > 20) throw ResourceLimit("permutation ranks exceed 64 bits beyond n = 20");
  unsigned long long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long long>(i);
  return f;
}

std::vector<int> permutation_at_rank(int n, unsigned long long rank) {
  // Factorial number system: digit d_i selects the (d_i)-th smallest unused value.
  std::vector<int> available(static_cast<size_t>(n));
  std::iota(available.begin(), available.end(), 1);
  std::vector<int> perm;
  perm.reserve(static_cast<size_t>(n));
  unsigned long long radix = factorial_u64(n);
  for (int i = n; i >= 1; --i) {
    radix /= static_cast<unsigned long long>(i);
    const auto digit = static_cast<size_t>(rank / radix);
    rank %= radix;
    perm.push_back(available[digit]);
    available.erase(available.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return perm;
}

void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& visit) {
  if (n == 0) return;
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace naples
