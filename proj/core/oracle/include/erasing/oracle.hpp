#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "erasing/words.hpp"

// Brute-force reference implementations. Nothing here calls the engine; the
// only shared code is the word and rational types.
namespace erasing::oracle {

// Image table: images[b] is the image of the block whose binary value is b.
struct Table {
  int k = 0;
  std::vector<FiniteWord> images;

  static Table read(const std::string& path);
  FiniteWord w_eps() const;
};

struct StreamEvaluation {
  std::uint64_t requested_bits = 0;
  FiniteWord produced;
  std::uint64_t consumed_input_bits = 0;
  bool stalled = false;
  // Exact value of the image, reconstructed when the block state recurs.
  std::optional<mpq_class> exact;
};

// Expands x̃ digit by digit and maps whole blocks until `bits` output digits
// exist or a recurring state shows the rest of the image is empty.
StreamEvaluation brute_eval(const Table& t, const UnitReal& x, std::uint64_t bits);

struct NoVanish {
  FiniteWord repeated;
};
struct NotAlternating {};
using VanishOutcome = std::variant<int, NoVanish, NotAlternating>;

// Position maps by exhaustive search; empty when none exists.
std::optional<std::vector<std::pair<FiniteWord, FiniteWord>>> brute_simple(const Table& t);
FiniteWord brute_alt(const std::vector<std::pair<FiniteWord, FiniteWord>>& simple, const FiniteWord& w);
VanishOutcome brute_vanishing(const Table& t, const FiniteWord& w, int max_steps);
VanishOutcome brute_vanishing(const std::vector<std::pair<FiniteWord, FiniteWord>>& simple, const FiniteWord& w,
                              int max_steps);

struct Coverage {
  bool complete = true;
  FiniteWord failure;
};
// Every word of length <= L is a prefix of a concatenation of nonempty images.
Coverage brute_factor_coverage(const std::vector<FiniteWord>& images, int L);

FiniteWord brute_block(const Table& t, const FiniteWord& w);
// (prefix, cycle) of x̃ by long division, shortest prefix and primitive cycle.
std::pair<FiniteWord, FiniteWord> brute_tilde(const mpq_class& x);

// The `key = value` lines of the derived-constants file.
std::vector<std::string> derived_constants(const std::string& data_dir);

}  // namespace erasing::oracle
