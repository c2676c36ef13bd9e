#pragma once

#include <cstdint>

namespace erasing {

struct Budget {
  int max_word_length = 12;
  int max_steps = 64;
  std::uint64_t max_intermediate = 4096;

  // Defaults, with max_word_length taken from ERASING_DYN_BUDGET_L when set.
  static Budget from_env();
};

}  // namespace erasing
