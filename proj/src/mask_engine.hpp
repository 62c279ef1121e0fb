#pragma once

// Internal subset-search engine over 64-bit element masks. Everything here
// requires the carrier to fit in a word; callers raise ResourceError first.

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "algraph/algebra.hpp"

namespace algraph::detail {

using Mask = std::uint64_t;

inline constexpr int kMaskCarrierCap = 64;

inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1U; }
inline int popcount(Mask m) { return std::popcount(m); }

inline std::vector<int> mask_to_vec(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

inline Mask vec_to_mask(std::span<const int> v) {
  Mask m = 0;
  for (int x : v) m |= bit(x);
  return m;
}

// Memoising closure engine for one algebra.
class MaskCloser {
 public:
  // Throws ResourceError when a.size() > 64.
  explicit MaskCloser(const FiniteAlgebra& a);

  const FiniteAlgebra& algebra() const { return *a_; }
  Mask full() const { return full_; }
  Mask empty_closure();     // E(A), or the empty set without nullaries
  Mask mono(int x);         // <x>
  Mask close(Mask seed);    // memoised least closed superset

 private:
  Mask close_uncached(Mask seed) const;

  const FiniteAlgebra* a_;
  Mask full_;
  std::unordered_map<Mask, Mask> memo_;
  std::vector<Mask> mono_;
  bool mono_ready_ = false;
};

struct GenSearchResult {
  std::vector<Mask> sets;  // inclusion-minimal generating sets of target
  bool budget_hit = false; // an independent non-generating set reached the cap
};

// All inclusion-minimal generating sets of `target` (a closed set) drawn from
// its own elements. A set is recorded iff it is independent and generates;
// budget_hit flags that independent sets at the subset cap were left
// unexplored, i.e. the enumeration of larger minimal sets is not certified.
GenSearchResult minimal_generating_sets(MaskCloser& closer, Mask target, int max_subset_size);

}  // namespace algraph::detail
