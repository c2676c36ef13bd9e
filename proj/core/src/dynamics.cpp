#include "erasing/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "detail.hpp"
#include "erasing/classifier.hpp"
#include "erasing/error.hpp"
#include "erasing/lift.hpp"

namespace erasing {

namespace {

PeriodicWord expansion_word(const UnitReal& y) {
  if (y.is_zero()) return PeriodicWord("", "0");
  return std::get<PeriodicWord>(to_tilde(y));
}

// Expansions of x: x̃, plus the 0^∞-ending one of a dyadic x.
std::vector<PeriodicWord> all_expansions(const UnitReal& x, const PeriodicWord& tilde) {
  if (x.is_zero()) return {PeriodicWord("", "0")};
  std::vector<PeriodicWord> out{tilde};
  if (x.is_dyadic()) {
    const std::size_t bits = mpz_sizeinbase(x.den().get_mpz_t(), 2) - 1;
    FiniteWord p = x.num().get_str(2);
    if (p.size() < bits) p.insert(0, bits - p.size(), '0');
    out.emplace_back(p, "0");
  }
  return out;
}

// ok[i] is true when the first i letters of w are a product of nonempty images.
std::vector<char> image_product_prefixes(const Substitution& s, const FiniteWord& w) {
  std::vector<char> ok(w.size() + 1, 0);
  ok[0] = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!ok[i]) continue;
    for (const FiniteWord& v : s.images()) {
      if (!v.empty() && i + v.size() <= w.size() && w.compare(i, v.size(), v) == 0) ok[i + v.size()] = 1;
    }
  }
  return ok;
}

UnitReal half() { return UnitReal(mpz_class(1), mpz_class(2)); }

Budget chain_budget() {
  Budget b;
  b.max_steps = 4096;
  b.max_intermediate = std::uint64_t{1} << 20;
  return b;
}

}  // namespace

namespace detail {

LevelChain level_chain(const Substitution& s, const FiniteWord& w, const Budget& budget, int min_levels) {
  const auto chain = find_erasing_chain(s, w, budget);
  if (!chain) throw Error(ErrorCode::kNotStronglyErasing, "no erasing chain for " + w);
  LevelChain out;
  out.words.push_back(w);
  for (const FiniteWord& e : chain->extensions) {
    out.ext.push_back(e);
    out.words.push_back(apply_strict(s, out.words.back() + e));
  }
  if (!out.words.back().empty()) throw Error(ErrorCode::kNotStronglyErasing, "erasing chain of " + w + " does not vanish");
  while (out.height() < min_levels) {
    out.ext.emplace_back();
    out.words.emplace_back();
  }
  return out;
}

PeriodicWord lift_rational(const Substitution& s, const LevelChain& chain, const PeriodicWord& top) {
  PeriodicWord v = top;
  for (int j = chain.height() - 1; j >= 0; --j) {
    const PeriodicWord q = factor_preimage(s, v);
    v = PeriodicWord(chain.ext[j] + q.prefix, q.cycle);
  }
  return PeriodicWord(chain.words[0] + v.prefix, v.cycle);
}

RunWord lift_levels(const Substitution& s, const RunLifter& lifter, const std::vector<std::uint64_t>& phases,
                    const RunWord& top) {
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  RunWord v = top;
  for (std::size_t j = phases.size(); j-- > 0;) {
    const std::uint64_t m = phases[j];
    RunWord next(s.eps_letters(m, (k - m) % k));
    next.append(lifter.cover(v));
    v = std::move(next);
  }
  return v;
}

}  // namespace detail

namespace {

// t is canonical, as returned by to_tilde.
bool is_eps_tilde(const Substitution& s, const PeriodicWord& t) {
  return t.prefix.empty() && t.cycle.size() <= s.w_eps().size() && t == PeriodicWord("", s.w_eps());
}

}  // namespace

bool is_eps_point(const Substitution& s, const UnitReal& x) {
  if (x.is_zero()) return false;
  return is_eps_tilde(s, std::get<PeriodicWord>(to_tilde(x)));
}

UnitReal eval_f(const Substitution& s, const UnitReal& x) {
  if (x.is_zero()) return {};
  const PeriodicWord t = std::get<PeriodicWord>(to_tilde(x));
  if (is_eps_tilde(s, t)) return {};
  const PeriodicImage img = apply_periodic(s, t);
  if (const auto* f = std::get_if<FiniteWord>(&img)) return value_of_finite(*f);
  return value_of(std::get<PeriodicWord>(img));
}

PointFlags membership(const Substitution& s, const UnitReal& x) {
  const int k = s.k();
  const FiniteWord zeros(static_cast<std::size_t>(k), '0');
  PointFlags f;
  f.in_Q2 = x.is_dyadic() && !x.is_zero() && !x.is_one();
  const PeriodicWord tilde = expansion_word(x);
  if (x.is_zero()) {
    f.in_E = s.w_eps() == zeros;
  } else {
    const PeriodicWord a = block_align(tilde, k);
    bool all = true;
    for (std::size_t i = 0; i < a.cycle.size() && all; i += k) all = a.cycle.compare(i, k, s.w_eps()) == 0;
    f.in_E = all;
  }
  const FiniteWord& v0 = s.image(zeros);
  const PeriodicWord tail("", v0.empty() ? FiniteWord("0") : v0);
  const std::size_t tail_period = primitive_root(tail.cycle).first.size();
  for (const PeriodicWord& raw : all_expansions(x, tilde)) {
    // A suffix equal to the tail exists only when the primitive periods agree.
    const PeriodicWord e = raw.canonical();
    if (e.cycle.size() != tail_period) continue;
    const std::uint64_t bound =
        e.prefix.size() + e.cycle.size() * std::max<std::size_t>(v0.size(), 1) + static_cast<std::uint64_t>(k) * k;
    const std::vector<char> ok = image_product_prefixes(s, e.take(bound));
    for (std::uint64_t i = e.prefix.size(); i <= bound && !f.in_F; ++i) f.in_F = ok[i] && e.drop(i) == tail;
    if (f.in_F) break;
  }
  f.in_C = !(f.in_Q2 || x.is_zero() || f.in_E);
  return f;
}

OrbitRecord orbit(const Substitution& s, const UnitReal& x, int n) {
  OrbitRecord r;
  r.points = orbit_points(s, x, n);
  for (const UnitReal& p : r.points) r.flags.push_back(membership(s, p));
  return r;
}

std::vector<UnitReal> orbit_points(const Substitution& s, const UnitReal& x, int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative orbit length");
  std::vector<UnitReal> pts{x};
  for (int i = 0; i < n; ++i) pts.push_back(eval_f(s, pts.back()));
  return pts;
}

UnitReal preimage_point(const Substitution& s, const UnitReal& y) {
  require_optimal(s);
  const UnitReal x = value_of(factor_preimage(s, expansion_word(y)));
  if (eval_f(s, x) != y) throw std::logic_error("preimage check failed for " + y.to_fraction());
  return x;
}

UnitReal xi_insert(const Substitution& s, const PeriodicWord& u, const InsertionSequence& a) {
  const std::size_t k = static_cast<std::size_t>(s.k());
  const PeriodicWord al = block_align(u, s.k());
  for (const FiniteWord* part : {&al.prefix, &al.cycle}) {
    for (std::size_t i = 0; i < part->size(); i += k) {
      if (part->compare(i, k, s.w_eps()) == 0)
        throw Error(ErrorCode::kHasEpsilonFactor, u.to_string() + " has w_eps as a k-factor");
    }
  }
  InsertionSequence seq = a;
  if (seq.cycle.empty()) seq.cycle = {0};
  const std::size_t np = al.prefix.size() / k, nc = al.cycle.size() / k;
  auto block = [&](std::size_t i) {
    return i < np ? al.prefix.substr(i * k, k) : al.cycle.substr(((i - np) % nc) * k, k);
  };
  const std::size_t pre = std::max(np, seq.prefix.size());
  const std::size_t per = std::lcm(nc, seq.cycle.size());
  auto emit = [&](std::size_t i, FiniteWord& out) {
    for (std::uint64_t r = 0; r < seq.at(i); ++r) out += s.w_eps();
    out += block(i);
  };
  FiniteWord p, c;
  for (std::size_t i = 0; i < pre; ++i) emit(i, p);
  for (std::size_t i = pre; i < pre + per; ++i) emit(i, c);
  return value_of(PeriodicWord(std::move(p), std::move(c)));
}

UnitReal strip_eps(const Substitution& s, const UnitReal& y) {
  const std::size_t k = static_cast<std::size_t>(s.k());
  if (y.is_zero()) {
    if (s.w_eps() == FiniteWord(k, '0')) throw Error(ErrorCode::kEpsilonTail, "0 = 0.w_eps^inf");
    return y;
  }
  const PeriodicWord al = block_align(std::get<PeriodicWord>(to_tilde(y)), s.k());
  auto strip = [&](const FiniteWord& w) {
    FiniteWord out;
    for (std::size_t i = 0; i < w.size(); i += k) {
      if (w.compare(i, k, s.w_eps()) != 0) out += w.substr(i, k);
    }
    return out;
  };
  FiniteWord c = strip(al.cycle);
  if (c.empty()) throw Error(ErrorCode::kEpsilonTail, y.to_fraction() + " ends in w_eps^inf");
  return value_of(PeriodicWord(strip(al.prefix), std::move(c)));
}

std::vector<UnitReal> fiber_samples(const Substitution& s, const UnitReal& y, std::size_t count, std::uint64_t seed) {
  if (count == 0) return {};
  PeriodicWord base;
  try {
    base = factor_preimage(s, expansion_word(y), true);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoFactorization) throw;
    throw Error(ErrorCode::kNotInRange, y.to_fraction() + " has no factorization over the images");
  }
  // An all-zero base tail needs insertion sequences that are not ultimately 0.
  const bool zero_tail = block_align(base, s.k()).cycle.find('1') == std::string::npos;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len(0, 6), cyc(1, 3), val(0, 3);
  std::set<UnitReal> seen;
  std::vector<UnitReal> out;
  auto accept = [&](const InsertionSequence& a) {
    const UnitReal x = xi_insert(s, base, a);
    if (!seen.insert(x).second) return;
    if (eval_f(s, x) != y) throw std::logic_error("fiber sample does not map to " + y.to_fraction());
    out.push_back(x);
  };
  if (!zero_tail) accept(InsertionSequence{});
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt > 1000 * count) throw Error(ErrorCode::kBudgetExceeded, "fiber sampling stalled");
    InsertionSequence a;
    a.prefix.resize(static_cast<std::size_t>(len(rng)));
    for (auto& v : a.prefix) v = static_cast<std::uint64_t>(val(rng));
    a.cycle.resize(static_cast<std::size_t>(cyc(rng)));
    for (auto& v : a.cycle) v = static_cast<std::uint64_t>(val(rng));
    if (zero_tail && std::all_of(a.cycle.begin(), a.cycle.end(), [](auto v) { return v == 0; })) a.cycle[0] = 1;
    accept(a);
  }
  out.resize(count);
  return out;
}

FiniteWord lift_prefix(const Substitution& s, const FiniteWord& t) {
  require_optimal(s);
  return lift_prefix_word(s, t);
}

LiftResult lift_through(const Substitution& s, const FiniteWord& w, const FiniteWord& u,
                        const std::vector<std::uint64_t>& pads, const Budget& budget) {
  require_optimal(s);
  Budget b = budget;
  b.max_steps = std::max(b.max_steps, 4096);
  b.max_intermediate = std::max<std::uint64_t>(b.max_intermediate, std::uint64_t{1} << 20);
  const detail::LevelChain chain = detail::level_chain(s, w, b);
  const int h = chain.height();
  auto prefix_of = [&](int j) {
    FiniteWord p = chain.ext[j];
    const std::uint64_t pad = static_cast<std::size_t>(j) < pads.size() ? pads[j] : 0;
    for (std::uint64_t r = 0; r < pad; ++r) p += s.w_eps();
    return p;
  };
  FiniteWord v = u;
  for (int j = h - 1; j >= 0; --j) v = prefix_of(j) + lift_prefix_word(s, v);

  LiftResult r;
  r.h = h;
  r.v = v;
  r.relative_levels.push_back(v);
  for (int j = 0; j < h; ++j) {
    const FiniteWord full = apply_strict(s, chain.words[j] + r.relative_levels.back());
    const FiniteWord& next = chain.words[j + 1];
    if (full.compare(0, next.size(), next) != 0) throw std::logic_error("lift level mismatch");
    r.relative_levels.push_back(full.substr(next.size()));
  }
  for (int j = 0; j < h; ++j) {
    const FiniteWord p = prefix_of(j);
    if (r.relative_levels[j].compare(0, p.size(), p) != 0) throw std::logic_error("lift prefix mismatch");
  }
  FiniteWord it = w + v;
  for (int j = 0; j < h; ++j) it = s.is_alternating() ? apply_alternating(s, it) : apply_strict(s, it);
  if (it.compare(0, u.size(), u) != 0) throw std::logic_error("lift does not reach " + u);
  return r;
}

RunWord StagedPoint::realized(std::size_t n) const {
  RunWord out;
  for (std::size_t i = 0; i < std::min(n, stages.size()); ++i) out.append(stages[i]);
  return out;
}

bool StagedPoint::all_verified() const {
  return std::all_of(verified.begin(), verified.end(), [](bool b) { return b; });
}

SensitivityWitness sensitivity_witness(const Substitution& s, const UnitReal& x, const UnitReal& delta) {
  require_optimal(s);
  if (delta.is_zero()) throw Error(ErrorCode::kInvalidArgument, "delta must be positive");
  const mpq_class d = delta.to_mpq();
  int n_bits = 0;
  while (mpq_class(1, mpz_class(1) << n_bits) > d) ++n_bits;
  const PeriodicWord xt = expansion_word(x);
  for (int extra = 0; extra < 16; ++extra, ++n_bits) {
    const detail::LevelChain chain = detail::level_chain(s, xt.take(n_bits), chain_budget());
    SensitivityWitness w;
    w.n = chain.height();
    const auto xs = orbit_points(s, x, w.n);
    w.fn_x = xs.back();
    const PeriodicWord top("", w.fn_x > half() ? "0" : "1");
    w.z = value_of(detail::lift_rational(s, chain, top));
    if (abs(x.to_mpq() - w.z.to_mpq()) >= d) continue;
    w.fn_z = orbit_points(s, w.z, w.n).back();
    w.verified = abs(w.fn_x.to_mpq() - w.fn_z.to_mpq()) >= mpq_class(1, 2);
    if (!w.verified) throw std::logic_error("sensitivity gap below 1/2");
    return w;
  }
  throw Error(ErrorCode::kBudgetExceeded, "no sensitivity witness near " + x.to_fraction());
}

MixingWitness mixing_witness(const Substitution& s, const FiniteWord& w, const UnitReal& y) {
  MixingWitness m;
  if (w.empty()) {
    m.h = 1;
    m.x = preimage_point(s, y);
    m.verified = true;
    return m;
  }
  require_optimal(s);
  const detail::LevelChain chain = detail::level_chain(s, w, chain_budget());
  m.h = chain.height();
  PeriodicWord top;
  try {
    top = expansion_word(y);
    m.x = value_of(detail::lift_rational(s, chain, top));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoFactorization) throw;
    throw Error(ErrorCode::kNotInRange, y.to_fraction() + " is not reached from [" + w + "]");
  }
  const PeriodicWord xt = expansion_word(m.x);
  m.verified = xt.take(w.size()) == w && orbit_points(s, m.x, m.h).back() == y;
  if (!m.verified) throw std::logic_error("mixing witness check failed");
  return m;
}

AlmostFixedWitness almost_fixed_witness(const Substitution& s, int j) {
  require_optimal(s);
  if (j < 1) throw Error(ErrorCode::kInvalidArgument, "j must be positive");
  const std::size_t k = static_cast<std::size_t>(s.k());
  AlmostFixedWitness r;
  r.x0 = value_of(PeriodicWord("", s.w_eps()));
  const std::size_t m = (static_cast<std::size_t>(j) + k) / k;
  // The block right after w_ε in lexicographic order; w_ε ≠ 1^k so it exists.
  const FiniteWord b = s.block_word(s.eps_index() + 1);
  const PeriodicWord q = factor_preimage(s, PeriodicWord("", "01"));
  FiniteWord head;
  for (std::size_t i = 0; i < m; ++i) head += s.w_eps();
  head += b;
  r.z = value_of(PeriodicWord(head + q.prefix, q.cycle));
  r.fz = eval_f(s, r.z);
  r.cylinder = s.image(b);
  r.right_side = true;
  const mpq_class gap = r.z.to_mpq() - r.x0.to_mpq();
  r.verified = gap > 0 && gap < mpq_class(1, mpz_class(1) << j) &&
               expansion_word(r.fz).take(r.cylinder.size()) == r.cylinder;
  if (!r.verified) throw std::logic_error("almost-fixed witness check failed");
  return r;
}

}  // namespace erasing
