#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "erasing/words.hpp"

namespace erasing {

// Position maps σ_1..σ_k with σ(b) = σ_1(b_1)…σ_k(b_k) for every block b.
struct AlternatingDecomposition {
  std::vector<std::array<FiniteWord, 2>> simple;

  const FiniteWord& letter(std::size_t position, char c) const {
    return simple[position][c == '1' ? 1 : 0];
  }
};

// Blocks (indices) whose images admit no common position split; minimal
// under removal of any single block.
struct NotAlternating {
  std::vector<std::size_t> blocks;
};

class Substitution {
 public:
  static Substitution parse(std::string_view text);
  static Substitution load(const std::string& path);
  // images[i] is the image of the i-th block in lexicographic order.
  static Substitution from_table(int k, std::vector<FiniteWord> images);

  int k() const { return k_; }
  std::size_t block_count() const { return images_.size(); }
  const std::vector<FiniteWord>& images() const { return images_; }
  const FiniteWord& image(std::size_t block) const { return images_[block]; }
  const FiniteWord& image(std::string_view block) const { return images_[block_index(block)]; }
  std::size_t eps_index() const { return eps_index_; }
  const FiniteWord& w_eps() const { return w_eps_; }
  std::size_t max_image_length() const { return max_image_length_; }

  bool is_alternating() const { return decomposition_.has_value(); }
  const std::optional<AlternatingDecomposition>& decomposition() const { return decomposition_; }

  // Letter i (0-based) of w_ε^∞, and the factor of length n starting there.
  char eps_letter(std::uint64_t i) const { return w_eps_[i % w_eps_.size()]; }
  FiniteWord eps_letters(std::uint64_t start, std::uint64_t n) const;

  FiniteWord block_word(std::size_t index) const;
  std::size_t block_index(std::string_view block) const;

  std::string to_spec() const;

 private:
  Substitution(int k, std::vector<FiniteWord> images);

  int k_ = 0;
  std::vector<FiniteWord> images_;
  std::size_t eps_index_ = 0;
  FiniteWord w_eps_;
  std::size_t max_image_length_ = 0;
  std::optional<AlternatingDecomposition> decomposition_;
};

std::variant<AlternatingDecomposition, NotAlternating> alternating_decomposition(const Substitution& s);

enum class ApplyMode { kAuto, kStrict, kAlternating };

// Strict mode maps the first k·⌊|w|/k⌋ letters block by block; alternating
// mode maps every letter, letter j through σ_{(phase + j) mod k}. kAuto picks
// alternating mode when a decomposition exists.
FiniteWord apply_finite(const Substitution& s, const FiniteWord& w, ApplyMode mode = ApplyMode::kAuto);
FiniteWord apply_strict(const Substitution& s, const FiniteWord& w);
FiniteWord apply_alternating(const Substitution& s, const FiniteWord& w, std::uint64_t phase = 0);

// Image of an infinite word; the finite σ(p) when the aligned cycle is erased.
using PeriodicImage = std::variant<PeriodicWord, FiniteWord>;
PeriodicImage apply_periodic(const Substitution& s, const PeriodicWord& w);

// Suffix of σⁿ(uv) after σⁿ(u), alternating substitutions only.
FiniteWord relative_image(const Substitution& s, const FiniteWord& u, int n, const FiniteWord& v);

struct StrictRelativeImage {
  FiniteWord image;
  // Letters of the running relative word used to complete σ^{i-1}(u) to a
  // block boundary, one entry per stage.
  std::vector<FiniteWord> consumed;
  // Trailing letters dropped by truncation, one entry per stage.
  std::vector<std::size_t> dropped;
};

// Block-mode relative map: each stage completes the image of u with the
// front of the running relative word, so that σⁿ(uv) = pⁿ·image exactly.
// Throws InsufficientInput when the running word is too short.
StrictRelativeImage relative_image_strict(const Substitution& s, const FiniteWord& u, int n,
                                          const FiniteWord& v);

}  // namespace erasing
