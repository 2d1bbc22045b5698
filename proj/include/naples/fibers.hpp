#pragma once

#include <iterator>
#include <vector>

#include "naples/types.hpp"

namespace naples {

/// Per-position run-length statistics of a permutation for backup distance k.
/// All sequences are indexed by spot position (1-based position i stored at
/// index i-1):
///   x[i]     = length of the longest run s_j..s_{i-1} with every s_t < s_i,
///   y[i]     = length of the longest run s_i..s_r with r <= i+k and every
///              s_t <= s_i (always >= 1),
///   ell_k[i] = x[i] + y[i]            when x[i] = i-1,
///              max(x[i]-k, 0) + y[i]  otherwise.
struct EllProfile {
  Permutation sigma;
  NaplesParameter k;
  std::vector<int> x;
  std::vector<int> y;
  std::vector<int> ell_k;
};

/// For each car i, the set of preferences a_i that make car i end up in spot
/// pi(i) when all other cars keep their spots. The product of the sets is
/// exactly the fiber of sigma under the outcome map.
struct AdmissibleSets {
  std::vector<std::vector<int>> sets;  // sets[i-1] = sorted choices for car i
};

/// Length of the longest run s_j..s_i ending at position i with every entry
/// <= s_i. 1-based i; throws std::out_of_range for i outside [1, n].
int ell(int i, const Permutation& sigma);

/// Length of the longest run s_i..s_r starting at position i with every
/// entry <= s_i, r unbounded. The window-limited y statistic satisfies
/// y_k(i) = min(k+1, ell_rev(i)).
int ell_rev(int i, const Permutation& sigma);

EllProfile ell_profile(const Permutation& sigma, NaplesParameter k);

/// Number of preferences mapping to sigma under the outcome map: the product
/// of ell_k over all positions. Exact.
BigInt fiber_size(const Permutation& sigma, NaplesParameter k);

AdmissibleSets admissible_sets(const Permutation& sigma, NaplesParameter k);

/// Lazily enumerable fiber of sigma: the Cartesian product of the admissible
/// sets, yielded in lexicographic order of the preference tuple.
class FiberMembers {
 public:
  FiberMembers(Permutation sigma, NaplesParameter k);

  class iterator {
   public:
    using value_type = ParkingPreference;
    using reference = ParkingPreference;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;

    ParkingPreference operator*() const;
    iterator& operator++();
    iterator operator++(int);

    bool operator==(const iterator& other) const;

   private:
    friend class FiberMembers;
    iterator(const AdmissibleSets* sets, bool done)
        : sets_(sets), indices_(done ? 0 : sets->sets.size(), 0), done_(done) {}

    const AdmissibleSets* sets_ = nullptr;
    std::vector<size_t> indices_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(&sets_, false); }
  iterator end() const { return iterator(&sets_, true); }

  const AdmissibleSets& sets() const { return sets_; }
  BigInt size() const;
  std::vector<ParkingPreference> to_vector() const;

 private:
  Permutation sigma_;
  NaplesParameter k_;
  AdmissibleSets sets_;
};

FiberMembers fiber_members(const Permutation& sigma, NaplesParameter k);

}  // namespace naples
