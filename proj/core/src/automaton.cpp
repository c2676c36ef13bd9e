#include "erasing/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace erasing {

namespace {

struct SetHash {
  std::size_t operator()(const FactorizationAutomaton::StateSet& s) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t x : s) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace

FactorizationAutomaton::FactorizationAutomaton(const Substitution& s) {
  std::map<FiniteWord, std::size_t> index;
  prefixes_.push_back(FiniteWord{});
  index[FiniteWord{}] = 0;
  for (const FiniteWord& img : s.images()) {
    for (std::size_t l = 1; l < img.size(); ++l) {
      FiniteWord p = img.substr(0, l);
      if (index.emplace(p, prefixes_.size()).second) prefixes_.push_back(std::move(p));
    }
  }
  const std::size_t n = prefixes_.size();
  words_ = (n + 63) / 64;
  extend_.assign(n, {kNone, kNone});
  emit_.assign(n, {kNone, kNone});
  completion_.assign(n, kNone);
  for (std::size_t i = 0; i < n; ++i) {
    for (int b = 0; b < 2; ++b) {
      const FiniteWord q = prefixes_[i] + static_cast<char>('0' + b);
      auto it = index.find(q);
      if (it != index.end()) extend_[i][b] = it->second;
      for (std::size_t blk = 0; blk < s.block_count(); ++blk) {
        if (s.image(blk) == q) {
          emit_[i][b] = blk;
          break;
        }
      }
    }
    for (std::size_t blk = 0; blk < s.block_count() && i > 0; ++blk) {
      if (s.image(blk).size() > prefixes_[i].size() && s.image(blk).compare(0, prefixes_[i].size(), prefixes_[i]) == 0) {
        completion_[i] = blk;
        break;
      }
    }
  }
}

FactorizationAutomaton::StateSet FactorizationAutomaton::initial() const {
  StateSet s(words_, 0);
  insert(s, 0);
  return s;
}

FactorizationAutomaton::StateSet FactorizationAutomaton::step(const StateSet& s, char b) const {
  StateSet out(words_, 0);
  const int bi = b == '1' ? 1 : 0;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = s[w];
    while (bits) {
      const std::size_t i = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
      bits &= bits - 1;
      if (extend_[i][bi] != kNone) insert(out, extend_[i][bi]);
      if (emit_[i][bi] != kNone) insert(out, 0);
    }
  }
  return out;
}

bool FactorizationAutomaton::empty(const StateSet& s) {
  return std::all_of(s.begin(), s.end(), [](std::uint64_t x) { return x == 0; });
}

bool FactorizationAutomaton::survives(const FiniteWord& w) const {
  StateSet s = initial();
  for (char c : w) {
    s = step(s, c);
    if (empty(s)) return false;
  }
  return true;
}

FactorizationAutomaton::Exploration FactorizationAutomaton::explore(std::size_t max_states) const {
  Exploration out;
  std::unordered_map<StateSet, std::size_t, SetHash> seen;
  std::vector<std::pair<std::size_t, char>> parent;
  std::vector<StateSet> states;
  std::deque<std::size_t> queue;
  states.push_back(initial());
  parent.push_back({kNone, 0});
  seen.emplace(states[0], 0);
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (char b : {'0', '1'}) {
      StateSet nxt = step(states[cur], b);
      if (empty(nxt)) {
        FiniteWord w(1, b);
        for (std::size_t p = cur; parent[p].first != kNone; p = parent[p].first) w.push_back(parent[p].second);
        std::reverse(w.begin(), w.end());
        out.outcome = Exploration::Outcome::kWitness;
        out.witness = std::move(w);
        out.reachable = states.size();
        return out;
      }
      if (seen.count(nxt)) continue;
      if (states.size() >= max_states) {
        out.outcome = Exploration::Outcome::kExhausted;
        out.reachable = states.size();
        return out;
      }
      seen.emplace(nxt, states.size());
      states.push_back(std::move(nxt));
      parent.push_back({cur, b});
      queue.push_back(states.size() - 1);
    }
  }
  out.outcome = Exploration::Outcome::kTotal;
  out.reachable = states.size();
  return out;
}

}  // namespace erasing
