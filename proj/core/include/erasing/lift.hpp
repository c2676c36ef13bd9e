#pragma once

#include <cstdint>
#include <vector>

#include "erasing/automaton.hpp"
#include "erasing/runword.hpp"

namespace erasing {

// Block-aligned preimages of long target words, driven by the survivor
// automaton. Within each copy of a run the factorization prefers extending
// the current partial image over closing it.
class RunLifter {
 public:
  explicit RunLifter(const Substitution& s);

  // Whole blocks q with σ(q) having target as a prefix (strict mode).
  // Throws NoFactorization when no such q exists.
  RunWord cover(const RunWord& target) const;

  const FactorizationAutomaton& automaton() const { return automaton_; }

 private:
  using StateSet = FactorizationAutomaton::StateSet;
  StateSet pre_letter(const StateSet& after, char c) const;
  StateSet pre_word(const FiniteWord& w, StateSet after) const;

  const Substitution* s_;
  FactorizationAutomaton automaton_;
};

// Block-aligned q with σ(q) = target exactly (strict mode). Unless raw, the
// tail is not 0^∞ (a w_ε block is added to an all-zero loop). Greedy longest
// factor along the pruned factor graph; ties cannot occur since equal images
// share the least block. Throws NoFactorization.
PeriodicWord factor_preimage(const Substitution& s, const PeriodicWord& target, bool raw = false);
PeriodicWord factor_preimage(const Substitution& s, const Expansion& target, bool raw = false);

// Shortest block word p (lexicographically least among shortest) with
// σ(p) having t as a prefix. Throws NoFactorization.
FiniteWord lift_prefix_word(const Substitution& s, const FiniteWord& t);

}  // namespace erasing
