#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "erasing/budget.hpp"
#include "erasing/runword.hpp"
#include "erasing/substitution.hpp"

namespace erasing {

// Exact image under f_σ: 0 for x = 0 or x̃ = w_ε^∞, else 0.σ(x̃).
UnitReal eval_f(const Substitution& s, const UnitReal& x);
// True when x̃ = w_ε^∞ (the second zero case of f_σ).
bool is_eps_point(const Substitution& s, const UnitReal& x);

struct PointFlags {
  bool in_Q2 = false;  // dyadic, not 0 or 1
  bool in_E = false;   // x̃ ends in w_ε^∞ at block boundaries
  bool in_F = false;   // 0.w·σ(0^k)^∞ with w a product of images
  bool in_C = false;   // outside the dyadics, 0 and E

  friend bool operator==(const PointFlags&, const PointFlags&) = default;
};
PointFlags membership(const Substitution& s, const UnitReal& x);

struct OrbitRecord {
  std::vector<UnitReal> points;
  std::vector<PointFlags> flags;
};
OrbitRecord orbit(const Substitution& s, const UnitReal& x, int n);
std::vector<UnitReal> orbit_points(const Substitution& s, const UnitReal& x, int n);

// x with f(x) = y, built from a factorization of ỹ over the nonempty images.
UnitReal preimage_point(const Substitution& s, const UnitReal& y);

// Eventually periodic sequence of non-negative integers.
struct InsertionSequence {
  std::vector<std::uint64_t> prefix;
  std::vector<std::uint64_t> cycle{0};

  std::uint64_t at(std::uint64_t i) const {
    return i < prefix.size() ? prefix[i] : cycle[(i - prefix.size()) % cycle.size()];
  }
};
// Point with expansion ∏ w_ε^{a_i}·u_(i) over the k-blocks u_(i) of u.
UnitReal xi_insert(const Substitution& s, const PeriodicWord& u, const InsertionSequence& a);
// y with every aligned w_ε block of ỹ removed.
UnitReal strip_eps(const Substitution& s, const UnitReal& y);
// Distinct ξ-images over a base preimage of y, each mapping exactly to y.
std::vector<UnitReal> fiber_samples(const Substitution& s, const UnitReal& y, std::size_t count,
                                    std::uint64_t seed);

// Shortest whole-block p with σ(p) ⊒ t.
FiniteWord lift_prefix(const Substitution& s, const FiniteWord& t);

struct LiftResult {
  int h = 0;
  FiniteWord v;
  // Relative image after σ^j(w), for j = 0..h.
  std::vector<FiniteWord> relative_levels;
};
// v with σ^h(wv) ⊒ u, h the length of an erasing chain of w and relative
// image j starting with e_j·w_ε^{pads[j]}.
LiftResult lift_through(const Substitution& s, const FiniteWord& w, const FiniteWord& u,
                        const std::vector<std::uint64_t>& pads = {}, const Budget& budget = {});

// Infinite word built in stages; the realized prefix is the concatenation.
struct StagedPoint {
  std::vector<RunWord> stages;
  std::vector<bool> verified;

  RunWord realized(std::size_t n) const;
  RunWord realized() const { return realized(stages.size()); }
  bool all_verified() const;
};

struct PeriodicPoint {
  StagedPoint point;
  int period = 0;
};
// Stages with σ^p(w^(0)…w^(i+1)) = w^(0)…w^(i), p = ε(u0).
PeriodicPoint periodic_point(const Substitution& s, const FiniteWord& u0, int stage_count);

struct DenseOrbit {
  StagedPoint point;
  // σ^{h_n}(w^(0)…w^(n)) starts with targets[n].
  std::vector<int> schedule;
  std::vector<FiniteWord> visits;
};
DenseOrbit dense_orbit_point(const Substitution& s, const std::vector<FiniteWord>& targets, int stage_count);
// First n nonempty words ordered by length then lexicographically.
std::vector<FiniteWord> enumerate_words(std::size_t n);

struct SensitivityWitness {
  UnitReal z;
  int n = 0;
  UnitReal fn_x;
  UnitReal fn_z;
  bool verified = false;
};
SensitivityWitness sensitivity_witness(const Substitution& s, const UnitReal& x, const UnitReal& delta);

struct MixingWitness {
  int h = 0;
  UnitReal x;
  bool verified = false;
};
MixingWitness mixing_witness(const Substitution& s, const FiniteWord& w, const UnitReal& y);

struct ScrambledEvent {
  int stage = 0;
  int time = 0;
  // Proximity: upper bound 2^-lcp on the distance; separation: exact lower bound.
  mpq_class bound;
  bool separation = false;
};

struct ScrambledPair {
  StagedPoint first;
  StagedPoint second;
  std::vector<int> schedule;
  std::vector<ScrambledEvent> proximity;
  std::vector<ScrambledEvent> separation;
};
// alpha and beta are eventually periodic bit sequences given by the first
// stage_count bits; stage n uses the extra w_ε² padding where the bit is 0.
ScrambledPair scrambled_pair(const Substitution& s, const std::vector<int>& alpha, const std::vector<int>& beta,
                             const std::vector<FiniteWord>& targets, int stage_count);

struct AlmostFixedWitness {
  UnitReal x0;
  UnitReal z;
  UnitReal fz;
  FiniteWord cylinder;
  bool right_side = true;
  bool verified = false;
};
AlmostFixedWitness almost_fixed_witness(const Substitution& s, int j);

}  // namespace erasing
