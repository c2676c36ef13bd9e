#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "erasing/budget.hpp"
#include "erasing/substitution.hpp"

namespace erasing {

// F(k_len): the largest vanishing order over all words of length k_len.
int max_vanishing_order(const Substitution& s, int k_len, int jobs = 1);

// max over 0 <= i <= n of |f^i(x) - f^i(y)|.
UnitReal d_n(const Substitution& s, const UnitReal& x, const UnitReal& y, int n);

struct SeparatedFamily {
  int k_len = 0;
  int n = 0;
  int t = 0;
  UnitReal epsilon;
  std::vector<UnitReal> points;
  // Block indices (1-based, lexicographic order of {0,1}^k_len), one per stage 0..n.
  std::vector<std::vector<std::uint32_t>> itineraries;
  bool itineraries_verified = false;
  bool pairs_verified = false;
  // True when only a random subset of pairs was checked.
  bool sampled = false;
  std::uint64_t pairs_checked = 0;
  // Smallest d_{n·t} among the checked pairs.
  UnitReal min_distance;

  bool verified() const { return itineraries_verified && pairs_verified; }
  // "i1,i2,…  p/q  0b0.P(C)  verified:yes"
  std::vector<std::string> export_lines() const;
};

// Points whose f^{j·t}-images lie in the padded cylinders [w_(i_{j+1})·w̄_ε],
// j = 0..n, built by exact backward lifting. seed drives pair sampling above
// 2^12 points.
SeparatedFamily separated_family(const Substitution& s, int k_len, int n, int jobs = 1, std::uint64_t seed = 1);

struct EntropyBound {
  int k_len = 0;
  int f = 0;
  // ε(w) for the localized variant, else 0.
  int local = 0;
  double value_in_log2 = 0;  // k_len / (f + local)

  // "F(2)=4, bound = 2·log2/4"
  std::string render() const;
};

EntropyBound entropy_lower_bound(const Substitution& s, int k_len, int jobs = 1);
// Bound k·log2/(F(k) + ε(w)) for the entropy near the cylinder [w].
EntropyBound localized_entropy_bound(const Substitution& s, int k_len, const FiniteWord& w, int jobs = 1);

}  // namespace erasing
