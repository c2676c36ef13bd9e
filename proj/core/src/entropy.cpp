#include "erasing/entropy.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "detail.hpp"
#include "erasing/classifier.hpp"
#include "erasing/dynamics.hpp"
#include "erasing/error.hpp"
#include "erasing/parallel.hpp"

namespace erasing {

namespace {

constexpr int kMaxPointBits = 16;
constexpr int kExhaustivePointBits = 12;
constexpr std::uint64_t kSampledPairs = 100000;

Budget vanishing_budget() {
  Budget b;
  b.max_steps = 4096;
  b.max_intermediate = std::uint64_t{1} << 20;
  return b;
}

FiniteWord word_of(std::uint64_t index, int len) {
  FiniteWord w(static_cast<std::size_t>(len), '0');
  for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(len - 1 - i)] = ((index >> i) & 1) ? '1' : '0';
  return w;
}

mpq_class distance(const UnitReal& a, const UnitReal& b) { return abs(a.to_mpq() - b.to_mpq()); }

}  // namespace

int max_vanishing_order(const Substitution& s, int k_len, int jobs) {
  require_alternating(s);
  if (k_len < 1 || k_len > 24) throw Error(ErrorCode::kInvalidArgument, "k_len must lie in 1..24");
  const std::uint64_t count = std::uint64_t{1} << k_len;
  const std::uint64_t chunk = 1024;
  const std::size_t tasks = static_cast<std::size_t>((count + chunk - 1) / chunk);
  std::vector<int> best(tasks, 0);
  const Budget b = vanishing_budget();
  parallel_for(tasks, jobs, [&](std::size_t task) {
    const std::uint64_t end = std::min(count, (task + 1) * chunk);
    for (std::uint64_t i = task * chunk; i < end; ++i) {
      best[task] = std::max(best[task], vanishing_order_or_throw(s, word_of(i, k_len), b));
    }
  });
  return *std::max_element(best.begin(), best.end());
}

UnitReal d_n(const Substitution& s, const UnitReal& x, const UnitReal& y, int n) {
  const auto xs = orbit_points(s, x, n);
  const auto ys = orbit_points(s, y, n);
  mpq_class best = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) best = std::max(best, distance(xs[i], ys[i]));
  return UnitReal(best);
}

std::vector<std::string> SeparatedFamily::export_lines() const {
  std::vector<std::string> out;
  const std::string status = !verified() ? "no" : sampled ? "sampled" : "yes";
  for (std::size_t p = 0; p < points.size(); ++p) {
    std::ostringstream line;
    for (std::size_t j = 0; j < itineraries[p].size(); ++j) line << (j ? "," : "") << itineraries[p][j];
    line << "  " << render_point(points[p]) << "  verified:" << status;
    out.push_back(line.str());
  }
  return out;
}

SeparatedFamily separated_family(const Substitution& s, int k_len, int n, int jobs, std::uint64_t seed) {
  require_alternating(s);
  require_optimal(s);
  if (k_len < 1 || n < 0) throw Error(ErrorCode::kInvalidArgument, "k_len >= 1 and n >= 0 required");
  if ((n + 1) * k_len > kMaxPointBits)
    throw Error(ErrorCode::kBudgetExceeded, "family of 2^" + std::to_string((n + 1) * k_len) + " points");
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  SeparatedFamily fam;
  fam.k_len = k_len;
  fam.n = n;
  fam.t = max_vanishing_order(s, k_len, jobs);
  fam.epsilon = UnitReal(mpz_class(1), mpz_class(1) << (k_len + 1));

  const std::uint64_t blocks = std::uint64_t{1} << k_len;
  std::vector<FiniteWord> padded(blocks);
  std::vector<detail::LevelChain> chains(blocks);
  for (std::uint64_t i = 0; i < blocks; ++i) {
    const FiniteWord w = word_of(i, k_len);
    padded[i] = w + s.eps_letters(w.size(), k);
    chains[i] = detail::level_chain(s, padded[i], vanishing_budget(), fam.t);
    if (chains[i].height() != fam.t) throw std::logic_error("padded block outlives F(k_len)");
  }

  const std::uint64_t total = std::uint64_t{1} << ((n + 1) * k_len);
  fam.points.resize(total);
  fam.itineraries.resize(total);
  std::vector<std::vector<UnitReal>> orbits(total);
  std::vector<char> itinerary_ok(total, 0);
  const auto stages = static_cast<std::size_t>(n + 1);
  parallel_for(static_cast<std::size_t>(total), jobs, [&](std::size_t p) {
    std::vector<std::uint32_t> it(stages);
    for (std::size_t j = 0; j < stages; ++j) {
      it[j] = static_cast<std::uint32_t>((p >> ((stages - 1 - j) * k_len)) & (blocks - 1));
    }
    PeriodicWord x(padded[it.back()], "1");
    for (std::size_t j = stages - 1; j-- > 0;) x = detail::lift_rational(s, chains[it[j]], x);
    fam.points[p] = value_of(x);
    orbits[p] = orbit_points(s, fam.points[p], n * fam.t);
    bool ok = true;
    for (std::size_t j = 0; j < stages && ok; ++j) {
      const UnitReal& y = orbits[p][j * static_cast<std::size_t>(fam.t)];
      const PeriodicWord e = y.is_zero() ? PeriodicWord("", "0") : std::get<PeriodicWord>(to_tilde(y));
      ok = e.take(padded[it[j]].size()) == padded[it[j]];
    }
    itinerary_ok[p] = ok;
    for (auto& v : it) ++v;
    fam.itineraries[p] = std::move(it);
  });
  fam.itineraries_verified = std::all_of(itinerary_ok.begin(), itinerary_ok.end(), [](char c) { return c != 0; });

  auto d = [&](std::size_t a, std::size_t b) {
    mpq_class best = 0;
    for (std::size_t i = 0; i < orbits[a].size(); ++i) best = std::max(best, distance(orbits[a][i], orbits[b][i]));
    return best;
  };
  const mpq_class eps = fam.epsilon.to_mpq();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  fam.sampled = (n + 1) * k_len > kExhaustivePointBits;
  if (!fam.sampled) {
    for (std::size_t a = 0; a < total; ++a)
      for (std::size_t b = a + 1; b < total; ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, static_cast<std::size_t>(total - 1));
    const std::size_t per_cylinder = static_cast<std::size_t>(total / blocks);
    std::uniform_int_distribution<std::size_t> inner(0, per_cylinder - 1);
    while (pairs.size() < kSampledPairs) {
      std::size_t a = pick(rng), b;
      // Half of the sample stays inside the first-stage cylinder of a.
      b = pairs.size() % 2 == 0 ? (a / per_cylinder) * per_cylinder + inner(rng) : pick(rng);
      if (a != b) pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  const std::size_t chunks = std::max<std::size_t>(1, static_cast<std::size_t>(std::max(jobs, 1)) * 4);
  std::vector<mpq_class> chunk_min(chunks, mpq_class(2));
  parallel_for(chunks, jobs, [&](std::size_t c) {
    for (std::size_t i = c; i < pairs.size(); i += chunks) chunk_min[c] = std::min(chunk_min[c], d(pairs[i].first, pairs[i].second));
  });
  const mpq_class lo = *std::min_element(chunk_min.begin(), chunk_min.end());
  fam.pairs_checked = pairs.size();
  fam.min_distance = pairs.empty() ? UnitReal(mpz_class(1), mpz_class(1)) : UnitReal(lo);
  fam.pairs_verified = pairs.empty() || lo >= eps;
  return fam;
}

std::string EntropyBound::render() const {
  std::ostringstream out;
  out << "F(" << k_len << ")=" << f;
  if (local > 0) {
    out << ", eps(w)=" << local << ", bound = " << k_len << "·log2/(" << f << "+" << local << ")";
  } else {
    out << ", bound = " << k_len << "·log2/" << f;
  }
  return out.str();
}

EntropyBound entropy_lower_bound(const Substitution& s, int k_len, int jobs) {
  EntropyBound b;
  b.k_len = k_len;
  b.f = max_vanishing_order(s, k_len, jobs);
  b.value_in_log2 = static_cast<double>(k_len) / b.f;
  return b;
}

EntropyBound localized_entropy_bound(const Substitution& s, int k_len, const FiniteWord& w, int jobs) {
  EntropyBound b = entropy_lower_bound(s, k_len, jobs);
  b.local = vanishing_order_or_throw(s, w, vanishing_budget());
  b.value_in_log2 = static_cast<double>(k_len) / (b.f + b.local);
  return b;
}

}  // namespace erasing
