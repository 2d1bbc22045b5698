#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "naples/types.hpp"

namespace naples {

/// n! as an unsigned 64-bit value; throws ResourceLimit for n > 20.
unsigned long long factorial_u64(int n);

/// The permutation of 1..n at the given rank in lexicographic order
/// (rank 0 = identity). Used to split S_n into contiguous chunks.
std::vector<int> permutation_at_rank(int n, unsigned long long rank);

void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& visit);

/// Folds every permutation of 1..n into an accumulator, chunked across
/// `threads` worker threads (0 = hardware concurrency). Partial results are
/// merged in chunk order, so any fold/merge pair built from exact arithmetic
/// yields the same value regardless of thread count.
///
/// fold:  void(Acc&, const std::vector<int>& one_line)
/// merge: void(Acc&, Acc&&)
template <typename Acc, typename FoldFn, typename MergeFn>
Acc reduce_over_permutations(int n, int threads, Acc identity, FoldFn&& fold, MergeFn&& merge) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  Acc total = std::move(identity);
  if (n == 0) return total;

  const unsigned long long count = factorial_u64(n);
  unsigned long long workers =
      threads > 0 ? static_cast<unsigned long long>(threads)
                  : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);

  if (workers <= 1) {
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
      fold(total, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  }

  std::vector<Acc> partials(workers, total);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned long long w = 0; w < workers; ++w) {
    const unsigned long long begin = count / workers * w + std::min(w, count % workers);
    const unsigned long long end =
        count / workers * (w + 1) + std::min(w + 1, count % workers);
    pool.emplace_back([&, w, begin, end] {
      std::vector<int> perm = permutation_at_rank(n, begin);
      for (unsigned long long r = begin; r < end; ++r) {
        fold(partials[w], perm);
        std::next_permutation(perm.begin(), perm.end());
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& partial : partials) merge(total, std::move(partial));
  return total;
}

}  // namespace naples
