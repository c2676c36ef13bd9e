#include "erasing/budget.hpp"

#include <cstdlib>
#include <string>

namespace erasing {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("ERASING_DYN_BUDGET_L")) {
    try {
      const int l = std::stoi(env);
      if (l > 0) b.max_word_length = l;
    } catch (const std::exception&) {
    }
  }
  return b;
}

}  // namespace erasing
