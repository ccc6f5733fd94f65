#pragma once

#include <functional>
#include <vector>

namespace symbalg {

/// Enumerate all vectors of `parts` non-negative integers summing to `total`
/// in lexicographic ascending order ((0,...,0,total) first).  The callback
/// returns false to stop early; the function returns false iff stopped.
inline bool for_each_composition(unsigned total, size_t parts,
                                 const std::function<bool(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> d(parts, 0);
  std::function<bool(size_t, unsigned)> rec = [&](size_t i, unsigned rem) {
    if (i + 1 == parts) {
      d[i] = rem;
      bool cont = fn(d);
      d[i] = 0;
      return cont;
    }
    for (unsigned v = 0; v <= rem; ++v) {
      d[i] = v;
      if (!rec(i + 1, rem - v)) {
        d[i] = 0;
        return false;
      }
    }
    d[i] = 0;
    return true;
  };
  if (parts == 0) return true;
  return rec(0, total);
}

}  // namespace symbalg
