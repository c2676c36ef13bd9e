#include "erasing/lift.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "erasing/error.hpp"

namespace erasing {

namespace {

constexpr std::size_t kNone = FactorizationAutomaton::kNone;

struct PlanSeq {
  std::vector<FactorizationAutomaton::StateSet> seq;
  std::size_t mu = 0;
  std::size_t lambda = 0;
  bool periodic = false;

  std::size_t index(std::uint64_t x) const {
    if (x < seq.size()) return static_cast<std::size_t>(x);
    return mu + static_cast<std::size_t>((x - mu) % lambda);
  }
};

// Distinct nonempty images with their least block, in block order.
std::vector<std::pair<FiniteWord, std::size_t>> distinct_images(const Substitution& s) {
  std::vector<std::pair<FiniteWord, std::size_t>> out;
  for (std::size_t b = 0; b < s.block_count(); ++b) {
    const FiniteWord& v = s.image(b);
    if (v.empty()) continue;
    if (std::none_of(out.begin(), out.end(), [&](const auto& p) { return p.first == v; })) out.push_back({v, b});
  }
  return out;
}

}  // namespace

RunLifter::RunLifter(const Substitution& s) : s_(&s), automaton_(s) {}

RunLifter::StateSet RunLifter::pre_letter(const StateSet& after, char c) const {
  StateSet out(after.size(), 0);
  const bool zero_ok = FactorizationAutomaton::contains(after, 0);
  for (std::size_t p = 0; p < automaton_.prefix_count(); ++p) {
    const std::size_t e = automaton_.extend(p, c);
    if ((e != kNone && FactorizationAutomaton::contains(after, e)) ||
        (zero_ok && automaton_.emit(p, c) != kNone)) {
      FactorizationAutomaton::insert(out, p);
    }
  }
  return out;
}

RunLifter::StateSet RunLifter::pre_word(const FiniteWord& w, StateSet after) const {
  for (std::size_t i = w.size(); i-- > 0;) after = pre_letter(after, w[i]);
  return after;
}

RunWord RunLifter::cover(const RunWord& target) const {
  const auto& runs = target.runs();
  const std::size_t n = automaton_.prefix_count();
  StateSet full(automaton_.initial().size(), 0);
  for (std::size_t p = 0; p < n; ++p) FactorizationAutomaton::insert(full, p);

  std::vector<PlanSeq> plans(runs.size());
  StateSet after = full;
  for (std::size_t r = runs.size(); r-- > 0;) {
    PlanSeq& plan = plans[r];
    std::map<StateSet, std::size_t> seen;
    plan.seq.push_back(after);
    seen[after] = 0;
    for (std::uint64_t t = 1; t <= runs[r].count; ++t) {
      StateSet nxt = pre_word(runs[r].base, plan.seq.back());
      auto it = seen.find(nxt);
      if (it != seen.end()) {
        plan.periodic = true;
        plan.mu = it->second;
        plan.lambda = plan.seq.size() - it->second;
        break;
      }
      seen[nxt] = plan.seq.size();
      plan.seq.push_back(std::move(nxt));
    }
    after = plan.seq[plan.index(runs[r].count)];
    if (FactorizationAutomaton::empty(after)) throw Error(ErrorCode::kNoFactorization, "target has no block cover");
  }
  if (!runs.empty() && !FactorizationAutomaton::contains(after, 0))
    throw Error(ErrorCode::kNoFactorization, "target has no block cover");

  RunWord out;
  std::size_t state = 0;
  for (std::size_t r = 0; r < runs.size(); ++r) {
    const FiniteWord& c = runs[r].base;
    const std::uint64_t m = runs[r].count;
    const PlanSeq& plan = plans[r];
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, FiniteWord>> cache;
    std::map<std::pair<std::size_t, std::size_t>, std::pair<std::uint64_t, std::size_t>> visited;
    FiniteWord recent;
    std::uint64_t t = 0;
    while (t < m) {
      const std::uint64_t x = m - t - 1;
      const std::size_t cls = plan.index(x);
      const auto key = std::make_pair(state, cls);
      if (plan.periodic && x >= plan.mu) {
        auto it = visited.find(key);
        if (it != visited.end()) {
          const std::uint64_t d = t - it->second.first;
          const std::uint64_t jumps = (m - plan.mu - t) / d;
          if (jumps > 0) {
            out.append(recent.substr(it->second.second), jumps);
            t += jumps * d;
          }
          visited.clear();
          recent.clear();
          if (t >= m) break;
          continue;
        }
        visited[key] = {t, recent.size()};
      }
      auto cached = cache.find(key);
      if (cached == cache.end()) {
        std::vector<StateSet> sets(c.size() + 1);
        sets[c.size()] = plan.seq[cls];
        for (std::size_t i = c.size(); i-- > 0;) sets[i] = pre_letter(sets[i + 1], c[i]);
        std::size_t s = state;
        FiniteWord emitted;
        for (std::size_t i = 0; i < c.size(); ++i) {
          const std::size_t e = automaton_.extend(s, c[i]);
          if (e != kNone && FactorizationAutomaton::contains(sets[i + 1], e)) {
            s = e;
          } else {
            const std::size_t blk = automaton_.emit(s, c[i]);
            if (blk == kNone || !FactorizationAutomaton::contains(sets[i + 1], 0))
              throw Error(ErrorCode::kNoFactorization, "inconsistent cover plan");
            emitted += s_->block_word(blk);
            s = 0;
          }
        }
        cached = cache.emplace(key, std::make_pair(s, std::move(emitted))).first;
      }
      state = cached->second.first;
      out.append(cached->second.second);
      if (plan.periodic && x >= plan.mu) recent += cached->second.second;
      ++t;
    }
  }
  if (state != 0) out.append(s_->block_word(automaton_.completion(state)));
  return out;
}

PeriodicWord factor_preimage(const Substitution& s, const PeriodicWord& target, bool raw) {
  const auto images = distinct_images(s);
  const std::uint64_t lp = target.prefix.size();
  const std::uint64_t lc = target.cycle.size();
  const std::uint64_t nodes = lp + lc;
  auto norm = [&](std::uint64_t pos) { return pos < nodes ? pos : lp + (pos - lp) % lc; };

  std::vector<std::vector<std::pair<std::uint64_t, std::size_t>>> out(nodes);
  std::vector<std::vector<std::uint64_t>> in(nodes);
  for (std::uint64_t pos = 0; pos < nodes; ++pos) {
    for (std::size_t i = 0; i < images.size(); ++i) {
      const FiniteWord& v = images[i].first;
      bool match = true;
      for (std::size_t j = 0; j < v.size() && match; ++j) match = target.at(pos + j) == v[j];
      if (!match) continue;
      const std::uint64_t nxt = norm(pos + v.size());
      out[pos].push_back({nxt, i});
      in[nxt].push_back(pos);
    }
  }
  // Prune positions without an infinite continuation.
  std::vector<std::size_t> live_out(nodes);
  std::vector<char> alive(nodes, 1);
  std::deque<std::uint64_t> queue;
  for (std::uint64_t p = 0; p < nodes; ++p) {
    live_out[p] = out[p].size();
    if (live_out[p] == 0) {
      alive[p] = 0;
      queue.push_back(p);
    }
  }
  while (!queue.empty()) {
    const std::uint64_t p = queue.front();
    queue.pop_front();
    for (std::uint64_t q : in[p]) {
      if (alive[q] && --live_out[q] == 0) {
        alive[q] = 0;
        queue.push_back(q);
      }
    }
  }
  if (!alive[0]) throw Error(ErrorCode::kNoFactorization, "no factorization of " + target.to_string());

  std::unordered_map<std::uint64_t, std::size_t> step_of;
  std::vector<std::size_t> chosen;
  std::uint64_t pos = 0;
  while (!step_of.count(pos)) {
    step_of[pos] = chosen.size();
    std::size_t best = images.size();
    std::uint64_t best_next = 0;
    for (const auto& [nxt, i] : out[pos]) {
      if (!alive[nxt]) continue;
      if (best == images.size() || images[i].first.size() > images[best].first.size()) {
        best = i;
        best_next = nxt;
      }
    }
    chosen.push_back(best);
    pos = best_next;
  }
  const std::size_t loop_start = step_of[pos];
  FiniteWord stem, loop;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    (i < loop_start ? stem : loop) += s.block_word(images[chosen[i]].second);
  }
  if (!raw && loop.find('1') == std::string::npos) loop += s.w_eps();
  return PeriodicWord(std::move(stem), std::move(loop));
}

PeriodicWord factor_preimage(const Substitution& s, const Expansion& target, bool raw) {
  if (std::holds_alternative<Zero>(target)) return factor_preimage(s, PeriodicWord("", "0"), raw);
  return factor_preimage(s, std::get<PeriodicWord>(target), raw);
}

FiniteWord lift_prefix_word(const Substitution& s, const FiniteWord& t) {
  if (t.empty()) return {};
  const std::size_t n = t.size();
  std::vector<std::size_t> parent(n + 1, kNone), via(n + 1, kNone);
  std::vector<char> seen(n + 1, 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const std::size_t pos = queue.front();
    queue.pop_front();
    for (std::size_t b = 0; b < s.block_count(); ++b) {
      const FiniteWord& v = s.image(b);
      if (v.empty()) continue;
      const std::size_t len = std::min(v.size(), n - pos);
      if (t.compare(pos, len, v, 0, len) != 0) continue;
      const std::size_t nxt = pos + len;
      if (seen[nxt]) continue;
      seen[nxt] = 1;
      parent[nxt] = pos;
      via[nxt] = b;
      if (nxt == n) {
        std::vector<std::size_t> blocks;
        for (std::size_t p = n; p != 0; p = parent[p]) blocks.push_back(via[p]);
        FiniteWord out;
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) out += s.block_word(*it);
        return out;
      }
      queue.push_back(nxt);
    }
  }
  throw Error(ErrorCode::kNoFactorization, "no block word covers " + t);
}

}  // namespace erasing
