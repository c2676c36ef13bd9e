#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "erasing/substitution.hpp"

namespace erasing {

struct Run {
  FiniteWord base;
  std::uint64_t count = 0;
};

// Finite word stored as a product of powers base^count. Bases of repeated
// runs are primitive and adjacent equal bases are merged, which keeps the
// exponentially long words of the staged constructions small.
class RunWord {
 public:
  RunWord() = default;
  explicit RunWord(const FiniteWord& w) { append(w); }
  static RunWord power(const FiniteWord& base, std::uint64_t count);

  std::uint64_t size() const { return size_; }
  bool empty() const { return size_ == 0; }
  const std::vector<Run>& runs() const { return runs_; }

  void append(const FiniteWord& w);
  void append(const FiniteWord& base, std::uint64_t count);
  void append(const RunWord& w);

  RunWord prefix(std::uint64_t n) const;
  RunWord suffix(std::uint64_t from) const;
  char at(std::uint64_t i) const;
  FiniteWord head(std::uint64_t n) const;
  // Throws BudgetExceeded above `limit` letters.
  FiniteWord expand(std::uint64_t limit = std::uint64_t{1} << 26) const;
  bool starts_with(const RunWord& p) const;
  // "(01)^12·0110…"
  std::string describe(std::size_t max_runs = 6) const;

  friend bool operator==(const RunWord& a, const RunWord& b);

 private:
  void push(FiniteWord base, std::uint64_t count);

  std::vector<Run> runs_;
  std::uint64_t size_ = 0;
};

// True when a and b agree on their first n letters (both must be that long).
bool equal_prefix(const RunWord& a, const RunWord& b, std::uint64_t n);

// Alternating-mode image, letter j mapped through σ_{(phase + j) mod k}.
RunWord apply_alternating(const Substitution& s, const RunWord& w, std::uint64_t phase = 0);

// Relative images through levels: X_0 = v, X_{j+1} = σ applied to X_j with
// phase phases[j].
RunWord relative_through(const Substitution& s, const std::vector<std::uint64_t>& phases, const RunWord& v);

// Phases |σ^j(w)| mod k for j < ε(w); throws when w does not vanish within
// max_steps levels.
std::vector<std::uint64_t> vanishing_phases(const Substitution& s, const RunWord& w, int max_steps = 4096);

}  // namespace erasing
