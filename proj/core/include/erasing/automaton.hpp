#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "erasing/substitution.hpp"

namespace erasing {

// Subset automaton over the proper prefixes of the nonempty images. A state
// records every partial image the input can currently end in.
class FactorizationAutomaton {
 public:
  using StateSet = std::vector<std::uint64_t>;
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  explicit FactorizationAutomaton(const Substitution& s);

  // Prefix 0 is ε.
  std::size_t prefix_count() const { return prefixes_.size(); }
  const FiniteWord& prefix(std::size_t i) const { return prefixes_[i]; }
  // Index of p·b when it is a proper prefix of an image, else kNone.
  std::size_t extend(std::size_t p, char b) const { return extend_[p][b == '1' ? 1 : 0]; }
  // Least block whose image is p·b, else kNone.
  std::size_t emit(std::size_t p, char b) const { return emit_[p][b == '1' ? 1 : 0]; }
  // Least block whose image starts with prefix p (p nonempty).
  std::size_t completion(std::size_t p) const { return completion_[p]; }

  StateSet initial() const;
  StateSet step(const StateSet& s, char b) const;
  static bool empty(const StateSet& s);
  static bool contains(const StateSet& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1; }
  static void insert(StateSet& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }

  // True when w is a prefix of some concatenation of nonempty images.
  bool survives(const FiniteWord& w) const;

  struct Exploration {
    enum class Outcome { kTotal, kWitness, kExhausted };
    Outcome outcome = Outcome::kExhausted;
    // Shortest (then lexicographically least) word emptying the survivor set.
    FiniteWord witness;
    std::size_t reachable = 0;
  };
  Exploration explore(std::size_t max_states = std::size_t{1} << 20) const;

 private:
  std::vector<FiniteWord> prefixes_;
  std::vector<std::array<std::size_t, 2>> extend_;
  std::vector<std::array<std::size_t, 2>> emit_;
  std::vector<std::size_t> completion_;
  std::size_t words_ = 1;
};

}  // namespace erasing
