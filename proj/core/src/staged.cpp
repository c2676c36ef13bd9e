#include <algorithm>
#include <stdexcept>

#include "detail.hpp"
#include "erasing/classifier.hpp"
#include "erasing/dynamics.hpp"
#include "erasing/error.hpp"
#include "erasing/lift.hpp"

namespace erasing {

namespace {

constexpr std::uint64_t kMaxPad = std::uint64_t{1} << 40;

void require_completely(const Substitution& s) {
  require_alternating(s);
  require_optimal(s);
  const Verdict v = check_completely_erasing(s, Budget{8, 256, 4096});
  if (!v.positive()) throw Error(ErrorCode::kClassificationUnsatisfied, "not completely erasing: " + v.render());
}

// Phases |σ^j(w)| mod k for j < levels, alternating mode.
std::vector<std::uint64_t> level_phases(const Substitution& s, RunWord w, int levels) {
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  std::vector<std::uint64_t> out;
  for (int j = 0; j < levels; ++j) {
    out.push_back(w.size() % k);
    w = apply_alternating(s, w);
  }
  return out;
}

RunWord iterate(const Substitution& s, RunWord w, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) w = apply_alternating(s, w);
  return w;
}

RunWord concat(RunWord a, const RunWord& b) {
  a.append(b);
  return a;
}

const FiniteWord& target_at(const std::vector<FiniteWord>& t, std::size_t n) {
  static const FiniteWord empty;
  return t.empty() ? empty : t[n % t.size()];
}

// Shortest prefix of the lift of target·w_ε-padding whose relative image
// through the levels covers the target. Returns (v, relative image).
std::pair<RunWord, RunWord> cover_stage(const Substitution& s, const RunLifter& lifter,
                                        const std::vector<std::uint64_t>& phases, const RunWord& target,
                                        std::uint64_t pad_phase) {
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  const std::uint64_t need = target.size();
  for (std::uint64_t pad = 4 * k; pad <= kMaxPad; pad *= 4) {
    RunWord u = target;
    u.append(s.eps_letters(pad_phase, pad));
    const RunWord v = detail::lift_levels(s, lifter, phases, u);
    const std::uint64_t len = detail::least_length(
        v.size(), [&](std::uint64_t l) { return relative_through(s, phases, v.prefix(l)).size() >= need; });
    RunWord rel = relative_through(s, phases, v.prefix(len));
    if (rel.size() > u.size()) continue;
    if (!u.starts_with(rel)) throw std::logic_error("relative image leaves the padded target");
    return {v.prefix(len), std::move(rel)};
  }
  throw Error(ErrorCode::kBudgetExceeded, "padding exceeded while covering a stage");
}

}  // namespace

PeriodicPoint periodic_point(const Substitution& s, const FiniteWord& u0, int stage_count) {
  require_completely(s);
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  if (u0.size() < k) throw Error(ErrorCode::kInvalidArgument, "u0 must have length >= k");
  Budget b;
  b.max_steps = 4096;
  PeriodicPoint out;
  out.period = vanishing_order_or_throw(s, u0, b);
  const RunLifter lifter(s);
  RunWord whole;
  RunWord u(u0);
  for (int i = 0; i < stage_count; ++i) {
    const RunWord w = concat(whole, u);
    const auto phases = level_phases(s, w, out.period);
    const std::uint64_t m = w.size() % k;
    auto [v, rel] = cover_stage(s, lifter, phases, u, m);
    const std::uint64_t extra = rel.size() - u.size();
    RunWord next(s.eps_letters(m + extra, (k - extra % k) % k));
    next.append(v);
    const RunWord before = whole;
    whole.append(rel);
    out.point.stages.push_back(rel);
    out.point.verified.push_back(iterate(s, whole, static_cast<std::size_t>(out.period)) == before);
    u = std::move(next);
  }
  return out;
}

std::vector<FiniteWord> enumerate_words(std::size_t n) {
  std::vector<FiniteWord> out;
  for (std::size_t len = 1; out.size() < n; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len) && out.size() < n; ++v) {
      FiniteWord w(len, '0');
      for (std::size_t i = 0; i < len; ++i) w[len - 1 - i] = ((v >> i) & 1) ? '1' : '0';
      out.push_back(std::move(w));
    }
  }
  return out;
}

namespace {

DenseOrbit dense_strict(const Substitution& s, const std::vector<FiniteWord>& targets, int stage_count) {
  Budget b;
  b.max_steps = 4096;
  b.max_intermediate = std::uint64_t{1} << 20;
  DenseOrbit out;
  FiniteWord whole;
  for (int n = 0; n < stage_count; ++n) {
    const FiniteWord& t = target_at(targets, static_cast<std::size_t>(n));
    const detail::LevelChain chain = detail::level_chain(s, whole, b);
    const int h = chain.height();
    FiniteWord v = t.empty() ? s.block_word(s.eps_index() == 0 ? 1 : 0) : t;
    for (int j = h - 1; j >= 0; --j) v = chain.ext[j] + lift_prefix_word(s, v);
    FiniteWord it = whole + v;
    for (int j = 0; j < h; ++j) it = apply_strict(s, it);
    whole += v;
    if (whole.size() > (std::size_t{1} << 22)) throw Error(ErrorCode::kBudgetExceeded, "dense orbit prefix too long");
    out.point.stages.emplace_back(v);
    out.point.verified.push_back(it.compare(0, t.size(), t) == 0);
    out.schedule.push_back(h);
    out.visits.push_back(it.substr(0, std::max<std::size_t>(t.size(), 1)));
  }
  return out;
}

}  // namespace

DenseOrbit dense_orbit_point(const Substitution& s, const std::vector<FiniteWord>& targets, int stage_count) {
  require_optimal(s);
  if (!s.is_alternating()) return dense_strict(s, targets, stage_count);
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  const RunLifter lifter(s);
  DenseOrbit out;
  RunWord whole;
  for (int n = 0; n < stage_count; ++n) {
    const FiniteWord& t = target_at(targets, static_cast<std::size_t>(n));
    const auto phases = vanishing_phases(s, whole);
    const int h = static_cast<int>(phases.size());
    // An empty target still contributes one letter so the stages keep growing.
    const RunWord target(t.empty() ? s.eps_letters(0, 1) : t);
    auto [v, rel] = cover_stage(s, lifter, phases, target, target.size() % k);
    whole.append(v);
    const RunWord image = iterate(s, whole, static_cast<std::size_t>(h));
    out.point.stages.push_back(v);
    out.point.verified.push_back(image.starts_with(RunWord(t)) && image.starts_with(rel));
    out.schedule.push_back(h);
    out.visits.push_back(rel.head(std::max<std::size_t>(t.size(), 1)));
  }
  return out;
}

namespace {

// Lower bound on |0.a − 0.b| from known prefixes of both expansions.
mpq_class separation_bound(const RunWord& a, const RunWord& b) {
  const std::uint64_t n = std::min<std::uint64_t>({a.size(), b.size(), 64});
  auto lo = [&](const RunWord& w) {
    const FiniteWord p = w.head(n);
    mpz_class v(p.empty() ? "0" : p, 2);
    return mpq_class(v, mpz_class(1) << n);
  };
  const mpq_class width(1, mpz_class(1) << n);
  const mpq_class la = lo(a), lb = lo(b);
  mpq_class best = 0;
  best = std::max(best, mpq_class(lb - (la + width)));
  best = std::max(best, mpq_class(la - (lb + width)));
  best.canonicalize();
  return best;
}

std::uint64_t common_prefix(const RunWord& a, const RunWord& b) {
  std::uint64_t lo = 0, hi = std::min(a.size(), b.size());
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (equal_prefix(a, b, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

struct PairStage {
  RunWord v;
  RunWord top;  // relative image at level h
  int h = 0;
  bool ok = false;
};

PairStage pair_stage(const Substitution& s, const RunLifter& lifter, const RunWord& whole, const FiniteWord& t,
                     int bit) {
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  PairStage st;
  const auto phases = vanishing_phases(s, whole);
  st.h = static_cast<int>(phases.size());
  const std::uint64_t m = phases.back();
  const FiniteWord e = s.eps_letters(m, (k - m) % k);
  const std::vector<std::uint64_t> lower(phases.begin(), phases.end() - 1);
  const FiniteWord gap = bit == 0 ? s.w_eps() + s.w_eps() : FiniteWord();
  for (std::uint64_t pad = 4 * k; pad <= kMaxPad; pad *= 4) {
    RunWord top(t);
    top.append(s.eps_letters(t.size() % k, pad));
    const RunWord u = lifter.cover(top);
    RunWord mid(e + gap);
    mid.append(u);
    const RunWord v = detail::lift_levels(s, lifter, lower, mid);
    const std::uint64_t need_below = e.size() + gap.size() + std::min<std::uint64_t>(2 * k, u.size());
    auto images = [&](std::uint64_t len) {
      RunWord b = relative_through(s, lower, v.prefix(len));
      RunWord a = apply_alternating(s, b, m);
      return std::pair{std::move(b), std::move(a)};
    };
    const std::uint64_t len = detail::least_length(v.size(), [&](std::uint64_t l) {
      const auto [b, a] = images(l);
      return a.size() >= t.size() && b.size() >= need_below;
    });
    auto [b, a] = images(len);
    if (a.size() > top.size()) continue;
    st.v = v.prefix(len);
    st.ok = top.starts_with(a) && mid.starts_with(b);
    st.top = std::move(a);
    return st;
  }
  throw Error(ErrorCode::kBudgetExceeded, "padding exceeded in scrambled stage");
}

}  // namespace

ScrambledPair scrambled_pair(const Substitution& s, const std::vector<int>& alpha, const std::vector<int>& beta,
                             const std::vector<FiniteWord>& targets, int stage_count) {
  require_completely(s);
  if (alpha.empty() || beta.empty() || alpha == beta)
    throw Error(ErrorCode::kInvalidArgument, "alpha and beta must be nonempty and differ");
  auto bit = [](const std::vector<int>& seq, std::size_t n) { return seq[n % seq.size()] != 0 ? 1 : 0; };
  const RunLifter lifter(s);
  ScrambledPair out;
  if (stage_count <= 0) return out;
  const FiniteWord& t0 = target_at(targets, 0);
  const RunWord start(t0.empty() ? s.block_word(s.eps_index() == 0 ? 1 : 0) : t0);
  RunWord a = start, b = start;
  for (StagedPoint* p : {&out.first, &out.second}) {
    p->stages.push_back(start);
    p->verified.push_back(true);
  }
  for (int n = 1; n < stage_count; ++n) {
    const FiniteWord& t = target_at(targets, static_cast<std::size_t>(n));
    const int ba = bit(alpha, static_cast<std::size_t>(n)), bb = bit(beta, static_cast<std::size_t>(n));
    const PairStage sa = pair_stage(s, lifter, a, t, ba);
    const PairStage sb = pair_stage(s, lifter, b, t, bb);
    if (sa.h != sb.h) throw std::logic_error("scrambled stages out of step");
    a.append(sa.v);
    b.append(sb.v);
    out.first.stages.push_back(sa.v);
    out.second.stages.push_back(sb.v);
    const bool check_a = sa.ok && iterate(s, a, static_cast<std::size_t>(sa.h)).starts_with(sa.top);
    const bool check_b = sb.ok && iterate(s, b, static_cast<std::size_t>(sb.h)).starts_with(sb.top);
    out.first.verified.push_back(check_a);
    out.second.verified.push_back(check_b);
    out.schedule.push_back(sa.h);
    const std::uint64_t lcp = std::min<std::uint64_t>(common_prefix(sa.top, sb.top), 4096);
    out.proximity.push_back({n, sa.h, mpq_class(1, mpz_class(1) << lcp), false});
    if (ba != bb) {
      const auto q = static_cast<std::size_t>(sa.h - 1);
      out.separation.push_back({n, sa.h - 1, separation_bound(iterate(s, a, q), iterate(s, b, q)), true});
    }
  }
  return out;
}

}  // namespace erasing
