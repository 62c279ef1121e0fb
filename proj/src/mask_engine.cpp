#include "mask_engine.hpp"

#include <string>

namespace algraph::detail {

MaskCloser::MaskCloser(const FiniteAlgebra& a) : a_(&a) {
  if (a.size() > kMaskCarrierCap)
    throw ResourceError("subset-search engine cap: carrier size " + std::to_string(a.size()) +
                        " exceeds " + std::to_string(kMaskCarrierCap) + " elements");
  full_ = (a.size() == 64) ? ~Mask{0} : (bit(a.size()) - 1);
}

Mask MaskCloser::close_uncached(Mask seed) const {
  const FiniteAlgebra& a = *a_;
  Mask cur = seed;
  for (const Operation& op : a.operations())
    if (op.arity == 0) cur |= bit(op.table[0]);

  std::vector<int> members = mask_to_vec(cur);
  std::size_t processed = 0;
  std::vector<int> idx;
  while (processed < members.size()) {
    std::size_t old = members.size();
    for (const Operation& op : a.operations()) {
      if (op.arity == 0) continue;
      const int k = op.arity;
      idx.assign(k, 0);
      // odometer over members[0..old), skipping tuples with no fresh argument
      while (true) {
        bool fresh = false;
        for (int i = 0; i < k; ++i)
          if (idx[i] >= static_cast<int>(processed)) { fresh = true; break; }
        if (fresh) {
          long long flat = 0;
          for (int i = 0; i < k; ++i) flat = flat * a.size() + members[idx[i]];
          int r = op.table[static_cast<std::size_t>(flat)];
          if (!has(cur, r)) {
            cur |= bit(r);
            members.push_back(r);
          }
        }
        int pos = k - 1;
        while (pos >= 0 && idx[pos] + 1 == static_cast<int>(old)) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
      }
    }
    processed = old;
  }
  return cur;
}

Mask MaskCloser::close(Mask seed) {
  auto it = memo_.find(seed);
  if (it != memo_.end()) return it->second;
  Mask result = close_uncached(seed);
  memo_.emplace(seed, result);
  return result;
}

Mask MaskCloser::empty_closure() { return close(0); }

Mask MaskCloser::mono(int x) {
  if (!mono_ready_) {
    mono_.resize(a_->size());
    for (int v = 0; v < a_->size(); ++v) mono_[v] = close(bit(v));
    mono_ready_ = true;
  }
  return mono_[x];
}

namespace {

struct GenSearch {
  MaskCloser& closer;
  Mask target;
  int cap;
  std::vector<int> elems;
  GenSearchResult result;

  void run() {
    Mask base = closer.close(0);
    if (base == target) {  // generated by constants alone: the empty set
      result.sets.push_back(0);
      return;
    }
    elems = mask_to_vec(target);
    recurse(0, base, 0);
  }

  void recurse(Mask s, Mask closure_s, std::size_t start) {
    for (std::size_t i = start; i < elems.size(); ++i) {
      int x = elems[i];
      if (has(closure_s, x)) continue;  // x in <S>: S+x dependent
      Mask sx = s | bit(x);
      bool independent = true;
      for (Mask rest = s; rest;) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        if (has(closer.close(sx & ~bit(e)), e)) { independent = false; break; }
      }
      if (!independent) continue;
      Mask closure_sx = closer.close(sx);
      if (closure_sx == target) {
        result.sets.push_back(sx);  // independent + generating = minimal
        continue;
      }
      if (popcount(sx) >= cap) {
        result.budget_hit = true;
        continue;
      }
      recurse(sx, closure_sx, i + 1);
    }
  }
};

}  // namespace

GenSearchResult minimal_generating_sets(MaskCloser& closer, Mask target, int max_subset_size) {
  GenSearch search{closer, target, max_subset_size, {}, {}};
  search.run();
  auto& sets = search.result.sets;
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    return mask_to_vec(a) < mask_to_vec(b);
  });
  return std::move(search.result);
}

}  // namespace algraph::detail
