#pragma once

#include <vector>

#include "erasing/budget.hpp"
#include "erasing/lift.hpp"
#include "erasing/substitution.hpp"

namespace erasing::detail {

// Levels of an erasing chain: words[j] = W_j (words.back() = ε) and
// ext[j] = e_j with |W_j e_j| ≡ 0 (mod k).
struct LevelChain {
  std::vector<FiniteWord> words;
  std::vector<FiniteWord> ext;

  int height() const { return static_cast<int>(ext.size()); }
};

// Throws NotStronglyErasing when no chain exists within the budget. With
// min_levels above the chain length, empty levels are appended.
LevelChain level_chain(const Substitution& s, const FiniteWord& w, const Budget& budget, int min_levels = 0);

// Infinite word W_0·V_0 with σ^h(W_0 V_0) = top exactly (strict mode).
PeriodicWord lift_rational(const Substitution& s, const LevelChain& chain, const PeriodicWord& top);

// Top-down prefix lift through alternating levels: V_j = e_j·cover(V_{j+1})
// where e_j completes a word of length ≡ phases[j] (mod k).
RunWord lift_levels(const Substitution& s, const RunLifter& lifter, const std::vector<std::uint64_t>& phases,
                    const RunWord& top);

// Least L in [1, |v|] with pred(L) true; pred must be monotone.
template <class Pred>
std::uint64_t least_length(std::uint64_t max_len, Pred&& pred) {
  std::uint64_t lo = 1, hi = max_len;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace erasing::detail
