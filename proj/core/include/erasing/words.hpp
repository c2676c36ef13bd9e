#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace erasing {

// Finite binary word over the characters '0' and '1'.
using FiniteWord = std::string;

bool is_binary(std::string_view w);

// Eventually periodic infinite word prefix·cycle^∞. Equality compares the
// denoted infinite words.
struct PeriodicWord {
  FiniteWord prefix;
  FiniteWord cycle;

  PeriodicWord() = default;
  PeriodicWord(FiniteWord p, FiniteWord c);

  // Primitive cycle and shortest prefix.
  PeriodicWord canonical() const;
  bool is_canonical() const;
  char at(std::uint64_t i) const;
  FiniteWord take(std::uint64_t n) const;
  // Suffix starting at position n.
  PeriodicWord drop(std::uint64_t n) const;
  // "0b0.P(C)"
  std::string to_string() const;

  friend bool operator==(const PeriodicWord& a, const PeriodicWord& b);
};

// Marker for the expansion 0^∞ of the point 0.
struct Zero {
  friend bool operator==(Zero, Zero) { return true; }
};

using Expansion = std::variant<Zero, PeriodicWord>;

// Rational point of [0,1] in lowest terms.
class UnitReal {
 public:
  UnitReal() : num_(0), den_(1) {}
  UnitReal(const mpz_class& num, const mpz_class& den);
  explicit UnitReal(const mpq_class& q);

  // "p/q", "0", "1" or "0b0.PREFIX(CYCLE)".
  static UnitReal parse(std::string_view text);

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }
  mpq_class to_mpq() const;
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }
  bool is_dyadic() const;
  std::string to_fraction() const;

  // Nonzero c means the odd part of den divides 2^c - 1; speeds up to_tilde.
  std::uint64_t period_hint() const { return period_hint_; }
  void set_period_hint(std::uint64_t c) { period_hint_ = c; }

  friend bool operator==(const UnitReal& a, const UnitReal& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const UnitReal& a, const UnitReal& b);

 private:
  mpz_class num_;
  mpz_class den_;
  std::uint64_t period_hint_ = 0;
};

// Expansion of x not ending in 0^∞; dyadic points take the 1^∞ tail.
Expansion to_tilde(const UnitReal& x);
UnitReal value_of(const PeriodicWord& w);
UnitReal value_of(const Expansion& e);
// Dyadic value 0.w.
UnitReal value_of_finite(const FiniteWord& w);

std::string to_string(const Expansion& e);
// "p/q  0b0.P(C)"
std::string render_point(const UnitReal& x);

// Same infinite word with |prefix| and |cycle| multiples of k.
PeriodicWord block_align(const PeriodicWord& w, int k);

bool has_k_factor(const FiniteWord& w, const FiniteWord& u, int k);
bool has_k_factor(const PeriodicWord& w, const FiniteWord& u, int k);

// Lexicographically ordered.
std::vector<FiniteWord> k_extensions(const FiniteWord& w, int k);
std::vector<FiniteWord> k_roundings(const FiniteWord& w, int k);

// Root r and exponent e with w = r^e, r primitive.
std::pair<FiniteWord, std::uint64_t> primitive_root(const FiniteWord& w);

}  // namespace erasing
