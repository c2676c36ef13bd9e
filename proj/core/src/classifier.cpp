#include "erasing/classifier.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "erasing/automaton.hpp"
#include "erasing/error.hpp"
#include "erasing/parallel.hpp"

namespace erasing {

namespace {

FiniteWord word_of(std::uint64_t v, int n) {
  FiniteWord w(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if ((v >> (n - 1 - i)) & 1) w[static_cast<std::size_t>(i)] = '1';
  }
  return w;
}

// All nonempty words of length ≤ max_len, by length then lexicographically.
std::vector<FiniteWord> all_words(int max_len) {
  std::vector<FiniteWord> out;
  for (int n = 1; n <= max_len; ++n) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) out.push_back(word_of(v, n));
  }
  return out;
}

std::string show(const FiniteWord& w) { return w.empty() ? std::string("ε") : w; }

Verdict make(VerdictKind kind, std::string summary, std::vector<std::string> evidence = {},
             std::int64_t bound = -1) {
  Verdict v;
  v.kind = kind;
  v.summary = std::move(summary);
  v.evidence = std::move(evidence);
  v.bound = bound;
  return v;
}

// Deterministic σ-cycle avoiding ε, starting from an aligned word.
std::optional<std::vector<FiniteWord>> deterministic_cycle(const Substitution& s, const FiniteWord& start,
                                                           const Budget& budget) {
  const std::size_t k = static_cast<std::size_t>(s.k());
  std::vector<FiniteWord> path{start};
  FiniteWord cur = start;
  for (int step = 0; step < budget.max_steps; ++step) {
    if (cur.empty() || cur.size() % k != 0 || cur.size() > budget.max_intermediate) return std::nullopt;
    cur = apply_strict(s, cur);
    auto it = std::find(path.begin(), path.end(), cur);
    if (it != path.end()) {
      std::vector<FiniteWord> cycle(it, path.end());
      cycle.push_back(cur);
      return cycle;
    }
    path.push_back(cur);
  }
  return std::nullopt;
}

std::string join(const std::vector<FiniteWord>& ws, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < ws.size(); ++i) out += (i ? sep : "") + show(ws[i]);
  return out;
}

}  // namespace

std::string_view verdict_name(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kYes: return "Yes";
    case VerdictKind::kYesBounded: return "YesBounded";
    case VerdictKind::kNo: return "No";
    case VerdictKind::kNoEmpirical: return "NoEmpirical";
    case VerdictKind::kUnknown: return "Unknown";
  }
  return "Unknown";
}

VerdictKind verdict_from_name(std::string_view name) {
  for (VerdictKind k : {VerdictKind::kYes, VerdictKind::kYesBounded, VerdictKind::kNo, VerdictKind::kNoEmpirical,
                        VerdictKind::kUnknown}) {
    if (verdict_name(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown verdict '" + std::string(name) + "'");
}

std::string Verdict::render() const {
  std::string out(verdict_name(kind));
  if (kind == VerdictKind::kYesBounded) out += "(" + std::to_string(bound) + ")";
  if (!summary.empty()) out += " (" + summary + ")";
  return out;
}

ClassificationReport::ClassificationReport(Verdict oc, Verdict strongly, Verdict completely, Verdict boundedly)
    : oc_(std::move(oc)), strongly_(std::move(strongly)), completely_(std::move(completely)),
      boundedly_(std::move(boundedly)) {
  if (boundedly_.positive() && !completely_.positive())
    throw std::logic_error("boundedly erasing without completely erasing");
  if (completely_.positive() && !strongly_.positive())
    throw std::logic_error("completely erasing without strongly erasing");
  if (boundedly_.kind == VerdictKind::kYes && oc_.positive())
    throw std::logic_error("boundedly erasing substitution satisfying the optimality condition");
  if (strongly_.proven_no() && completely_.positive()) throw std::logic_error("strongly No with completely Yes");
}

VanishingResult vanishing_order(const Substitution& s, const FiniteWord& w, const Budget& budget) {
  if (!s.is_alternating()) throw Error(ErrorCode::kNotAlternatingRequired, "");
  VanishingResult r;
  std::unordered_set<FiniteWord> seen;
  FiniteWord cur = w;
  int n = 0;
  while (!cur.empty()) {
    if (!seen.insert(cur).second) {
      r.status = VanishingResult::Status::kDiverged;
      r.order = n;
      r.repeated = cur;
      return r;
    }
    if (n >= budget.max_steps || cur.size() > budget.max_intermediate) {
      r.status = VanishingResult::Status::kBudgetExceeded;
      r.order = n;
      return r;
    }
    cur = apply_alternating(s, cur, 0);
    ++n;
  }
  r.status = VanishingResult::Status::kVanished;
  r.order = n;
  return r;
}

int vanishing_order_or_throw(const Substitution& s, const FiniteWord& w, const Budget& budget) {
  const VanishingResult r = vanishing_order(s, w, budget);
  if (r.status == VanishingResult::Status::kDiverged)
    throw Error(ErrorCode::kClassificationUnsatisfied, "word " + show(w) + " never vanishes (recurs at " + r.repeated + ")");
  if (r.status == VanishingResult::Status::kBudgetExceeded)
    throw Error(ErrorCode::kBudgetExceeded, "vanishing order of " + show(w));
  return r.order;
}

std::optional<ErasingChain> find_erasing_chain(const Substitution& s, const FiniteWord& w, const Budget& budget) {
  const std::size_t k = static_cast<std::size_t>(s.k());
  if (s.is_alternating()) {
    const VanishingResult r = vanishing_order(s, w, budget);
    if (!r.ok()) return std::nullopt;
    ErasingChain chain;
    FiniteWord cur = w;
    while (!cur.empty()) {
      const std::size_t m = cur.size() % k;
      chain.extensions.push_back(s.eps_letters(m, (k - m) % k));
      cur = apply_alternating(s, cur, 0);
    }
    return chain;
  }
  if (w.empty()) return ErasingChain{};
  struct Node {
    FiniteWord word;
    std::size_t parent;
    FiniteWord ext;
    int depth;
  };
  std::vector<Node> nodes{{w, 0, {}, 0}};
  std::unordered_set<FiniteWord> seen{w};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= budget.max_steps) continue;
    for (const FiniteWord& e : k_extensions(nodes[head].word, s.k())) {
      FiniteWord next = apply_strict(s, nodes[head].word + e);
      if (next.empty()) {
        ErasingChain chain;
        chain.extensions.push_back(e);
        for (std::size_t p = head; p != 0; p = nodes[p].parent) chain.extensions.push_back(nodes[p].ext);
        std::reverse(chain.extensions.begin(), chain.extensions.end());
        return chain;
      }
      if (next.size() > budget.max_intermediate || !seen.insert(next).second) continue;
      if (seen.size() > (std::size_t{1} << 16)) return std::nullopt;
      nodes.push_back({std::move(next), head, e, nodes[head].depth + 1});
    }
  }
  return std::nullopt;
}

Verdict check_optimality(const Substitution& s) {
  const FactorizationAutomaton a(s);
  const auto ex = a.explore();
  switch (ex.outcome) {
    case FactorizationAutomaton::Exploration::Outcome::kTotal:
      return make(VerdictKind::kYes, "survivor automaton total over " + std::to_string(ex.reachable) + " states");
    case FactorizationAutomaton::Exploration::Outcome::kWitness:
      return make(VerdictKind::kNo, "witness: " + ex.witness, {ex.witness});
    case FactorizationAutomaton::Exploration::Outcome::kExhausted:
      break;
  }
  return make(VerdictKind::kUnknown, "state budget " + std::to_string(ex.reachable) + " exhausted");
}

Verdict check_strongly_erasing(const Substitution& s, const Budget& budget, int jobs) {
  const std::size_t k = static_cast<std::size_t>(s.k());
  for (int n = s.k(); n <= budget.max_word_length; n += s.k()) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
      if (auto cycle = deterministic_cycle(s, word_of(v, n), budget)) {
        return make(VerdictKind::kNo, "witness cycle: " + join(*cycle, " -> "), *cycle);
      }
    }
  }
  const std::vector<FiniteWord> words = all_words(budget.max_word_length);
  std::vector<std::optional<ErasingChain>> chains(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) { chains[i] = find_erasing_chain(s, words[i], budget); });
  int longest = 0;
  std::vector<std::string> evidence;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (!chains[i]) {
      return make(VerdictKind::kUnknown, "no erasing chain for " + words[i] + " within budget (L=" +
                                             std::to_string(budget.max_word_length) + ", steps=" +
                                             std::to_string(budget.max_steps) + ")");
    }
    longest = std::max(longest, chains[i]->length());
    if (words[i].size() <= k) {
      evidence.push_back(words[i] + ": e=(" + join(chains[i]->extensions, ",") + ")");
    }
  }
  return make(VerdictKind::kYes,
              "all " + std::to_string(words.size()) + " words with |w| <= " + std::to_string(budget.max_word_length) +
                  " erase; longest chain " + std::to_string(longest),
              evidence);
}

Verdict check_completely_erasing(const Substitution& s, const Budget& budget, int jobs) {
  const auto dec = alternating_decomposition(s);
  if (const auto* na = std::get_if<NotAlternating>(&dec)) {
    std::vector<FiniteWord> blocks;
    for (std::size_t b : na->blocks) blocks.push_back(s.block_word(b));
    return make(VerdictKind::kNo, "not alternating: blocks " + join(blocks, ","), blocks);
  }
  const auto& ad = std::get<AlternatingDecomposition>(dec);
  for (std::size_t i = 0; i < static_cast<std::size_t>(s.k()); ++i) {
    if (!ad.letter(i, s.w_eps()[i]).empty())
      return make(VerdictKind::kNo, "position " + std::to_string(i + 1) + " keeps the letter of w_eps");
  }
  const std::vector<FiniteWord> words = all_words(budget.max_word_length);
  std::vector<VanishingResult> res(words.size());
  parallel_for(words.size(), jobs, [&](std::size_t i) { res[i] = vanishing_order(s, words[i], budget); });
  int worst = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (res[i].status == VanishingResult::Status::kDiverged)
      return make(VerdictKind::kNo, "witness: " + words[i] + " recurs at " + res[i].repeated, {words[i], res[i].repeated});
  }
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (res[i].status == VanishingResult::Status::kBudgetExceeded)
      return make(VerdictKind::kUnknown, "budget exceeded at " + words[i]);
    worst = std::max(worst, res[i].order);
  }
  return make(VerdictKind::kYesBounded,
              "every word with |w| <= " + std::to_string(budget.max_word_length) + " vanishes; max order " +
                  std::to_string(worst),
              {}, budget.max_word_length);
}

Verdict check_boundedly_erasing(const Substitution& s, const Budget& budget, const Verdict* completely) {
  Verdict ce = completely ? *completely : check_completely_erasing(s, budget);
  if (!ce.positive()) {
    return make(ce.kind == VerdictKind::kUnknown ? VerdictKind::kUnknown : VerdictKind::kNo,
                "not completely erasing");
  }
  const std::size_t k = static_cast<std::size_t>(s.k());
  bool aligned = std::all_of(s.images().begin(), s.images().end(),
                             [&](const FiniteWord& v) { return v.size() % k == 0; });
  if (aligned) {
    const std::size_t n = s.block_count();
    std::vector<std::vector<std::size_t>> edges(n);
    std::vector<std::string> evidence;
    for (std::size_t b = 0; b < n; ++b) {
      const FiniteWord& img = s.image(b);
      std::vector<FiniteWord> targets;
      for (std::size_t i = 0; i < img.size(); i += k) {
        const std::size_t t = s.block_index(std::string_view(img).substr(i, k));
        if (std::find(edges[b].begin(), edges[b].end(), t) == edges[b].end()) {
          edges[b].push_back(t);
          targets.push_back(s.block_word(t));
        }
      }
      if (!targets.empty()) evidence.push_back(s.block_word(b) + " -> {" + join(targets, ",") + "}");
    }
    // Longest path by memoized DFS; state 1 marks the current stack.
    std::vector<int> state(n, 0), depth(n, 0);
    bool cyclic = false;
    std::function<int(std::size_t)> longest = [&](std::size_t b) -> int {
      if (state[b] == 2) return depth[b];
      if (state[b] == 1) {
        cyclic = true;
        return 0;
      }
      state[b] = 1;
      int d = 0;
      for (std::size_t t : edges[b]) d = std::max(d, longest(t) + 1);
      state[b] = 2;
      depth[b] = d;
      return d;
    };
    int path = 0;
    for (std::size_t b = 0; b < n; ++b) path = std::max(path, longest(b));
    if (!cyclic) {
      return make(VerdictKind::kYes,
                  "block DAG certificate, epsilon(w) <= " + std::to_string(path + 1), evidence, path + 1);
    }
  }
  // Heuristic: orders of 1^(k·2^j) keep growing.
  std::vector<std::string> evidence;
  std::vector<int> orders;
  for (std::uint64_t len = k; len <= budget.max_intermediate; len *= 2) {
    const VanishingResult r = vanishing_order(s, FiniteWord(len, '1'), budget);
    if (!r.ok()) break;
    orders.push_back(r.order);
    evidence.push_back("epsilon(1^" + std::to_string(len) + ")=" + std::to_string(r.order));
  }
  bool increasing = orders.size() >= 4;
  for (std::size_t i = 1; i < orders.size() && increasing; ++i) increasing = orders[i] > orders[i - 1];
  if (increasing) {
    return make(VerdictKind::kNoEmpirical,
                "family 1^m: " + evidence.front() + " ... " + evidence.back() + ", strictly increasing", evidence);
  }
  return make(VerdictKind::kUnknown, "no DAG certificate and no growing family", evidence);
}

ClassificationReport classify(const Substitution& s, const Budget& budget, int jobs) {
  Verdict oc = check_optimality(s);
  Verdict strongly = check_strongly_erasing(s, budget, jobs);
  Verdict completely = check_completely_erasing(s, budget, jobs);
  Verdict boundedly = check_boundedly_erasing(s, budget, &completely);
  if (boundedly.kind == VerdictKind::kYes && completely.kind == VerdictKind::kYesBounded) {
    completely.kind = VerdictKind::kYes;
    completely.summary = "implied by the block DAG certificate; " + completely.summary;
    completely.bound = -1;
  }
  if (completely.positive() && !strongly.positive()) {
    strongly = make(VerdictKind::kYes, "implied by completely erasing");
  }
  if (strongly.proven_no() && completely.kind != VerdictKind::kNo) {
    completely = make(VerdictKind::kNo, "not strongly erasing");
  }
  if (strongly.proven_no() && boundedly.kind != VerdictKind::kNo) {
    boundedly = make(VerdictKind::kNo, "not strongly erasing");
  }
  return ClassificationReport(std::move(oc), std::move(strongly), std::move(completely), std::move(boundedly));
}

void require_optimal(const Substitution& s) {
  const Verdict v = check_optimality(s);
  if (v.kind != VerdictKind::kYes) throw Error(ErrorCode::kNotOptimal, v.render());
}

void require_alternating(const Substitution& s) {
  if (!s.is_alternating()) throw Error(ErrorCode::kClassificationUnsatisfied, "substitution is not alternating");
}

}  // namespace erasing
