#include "erasing/runword.hpp"

#include <numeric>

#include "erasing/error.hpp"

namespace erasing {

namespace {

constexpr std::size_t kLiteralMerge = 64;
constexpr unsigned __int128 kMaxLength = static_cast<unsigned __int128>(1) << 62;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  if (p > kMaxLength) throw Error(ErrorCode::kBudgetExceeded, "word length overflow");
  return static_cast<std::uint64_t>(p);
}

struct Cursor {
  const std::vector<Run>* runs;
  std::size_t idx = 0;
  std::uint64_t off = 0;

  std::uint64_t remaining() const {
    const Run& r = (*runs)[idx];
    return r.base.size() * r.count - off;
  }
  std::uint64_t period() const { return (*runs)[idx].base.size(); }
  char get(std::uint64_t j) const {
    const FiniteWord& b = (*runs)[idx].base;
    return b[(off + j) % b.size()];
  }
  void advance(std::uint64_t n) {
    while (n > 0) {
      const std::uint64_t rem = remaining();
      if (n < rem) {
        off += n;
        return;
      }
      n -= rem;
      ++idx;
      off = 0;
    }
  }
};

}  // namespace

RunWord RunWord::power(const FiniteWord& base, std::uint64_t count) {
  RunWord w;
  w.append(base, count);
  return w;
}

void RunWord::push(FiniteWord base, std::uint64_t count) {
  if (!runs_.empty() && runs_.back().base == base) {
    runs_.back().count += count;
    return;
  }
  if (count == 1 && !runs_.empty() && runs_.back().count == 1 &&
      runs_.back().base.size() + base.size() <= kLiteralMerge) {
    FiniteWord merged = runs_.back().base + base;
    runs_.pop_back();
    auto [root, e] = primitive_root(merged);
    push(std::move(root), e);
    return;
  }
  runs_.push_back({std::move(base), count});
}

void RunWord::append(const FiniteWord& w) {
  if (w.empty()) return;
  std::size_t start = 0;
  if (!runs_.empty()) {
    const FiniteWord& b = runs_.back().base;
    while (w.size() - start >= b.size() && w.compare(start, b.size(), b) == 0) {
      ++runs_.back().count;
      start += b.size();
    }
  }
  size_ += start;
  if (start == w.size()) return;
  append(w.substr(start), 1);
}

void RunWord::append(const FiniteWord& base, std::uint64_t count) {
  if (base.empty() || count == 0) return;
  auto [root, e] = primitive_root(base);
  const std::uint64_t n = checked_mul(e, count);
  const std::uint64_t len = checked_mul(root.size(), n);
  if (static_cast<unsigned __int128>(size_) + len > kMaxLength) throw Error(ErrorCode::kBudgetExceeded, "word length overflow");
  size_ += len;
  push(std::move(root), n);
}

void RunWord::append(const RunWord& w) {
  for (const Run& r : w.runs_) {
    if (r.count == 1) {
      append(r.base);
    } else {
      append(r.base, r.count);
    }
  }
}

RunWord RunWord::prefix(std::uint64_t n) const {
  RunWord out;
  for (const Run& r : runs_) {
    if (n == 0) break;
    const std::uint64_t len = r.base.size() * r.count;
    if (len <= n) {
      out.append(r.base, r.count);
      n -= len;
      continue;
    }
    out.append(r.base, n / r.base.size());
    out.append(r.base.substr(0, n % r.base.size()));
    n = 0;
  }
  return out;
}

RunWord RunWord::suffix(std::uint64_t from) const {
  RunWord out;
  for (const Run& r : runs_) {
    const std::uint64_t len = r.base.size() * r.count;
    if (from >= len) {
      from -= len;
      continue;
    }
    if (from > 0) {
      const std::uint64_t q = from / r.base.size();
      const std::uint64_t rem = from % r.base.size();
      if (rem > 0) {
        out.append(r.base.substr(rem));
        out.append(r.base, r.count - q - 1);
      } else {
        out.append(r.base, r.count - q);
      }
      from = 0;
      continue;
    }
    out.append(r.base, r.count);
  }
  return out;
}

char RunWord::at(std::uint64_t i) const {
  for (const Run& r : runs_) {
    const std::uint64_t len = r.base.size() * r.count;
    if (i < len) return r.base[i % r.base.size()];
    i -= len;
  }
  throw Error(ErrorCode::kInvalidArgument, "index out of range");
}

FiniteWord RunWord::head(std::uint64_t n) const {
  FiniteWord out;
  for (const Run& r : runs_) {
    for (std::uint64_t c = 0; c < r.count && out.size() < n; ++c) out += r.base;
    if (out.size() >= n) break;
  }
  if (out.size() > n) out.resize(n);
  return out;
}

FiniteWord RunWord::expand(std::uint64_t limit) const {
  if (size_ > limit) throw Error(ErrorCode::kBudgetExceeded, "word of length " + std::to_string(size_));
  return head(size_);
}

bool RunWord::starts_with(const RunWord& p) const {
  return p.size_ <= size_ && equal_prefix(*this, p, p.size_);
}

std::string RunWord::describe(std::size_t max_runs) const {
  std::string out;
  for (std::size_t i = 0; i < runs_.size() && i < max_runs; ++i) {
    if (i) out += "·";
    const Run& r = runs_[i];
    out += r.count == 1 ? r.base : "(" + r.base + ")^" + std::to_string(r.count);
  }
  if (runs_.size() > max_runs) out += "·…";
  if (out.empty()) out = "ε";
  return out + " [len " + std::to_string(size_) + "]";
}

bool equal_prefix(const RunWord& a, const RunWord& b, std::uint64_t n) {
  if (a.size() < n || b.size() < n) return false;
  Cursor ca{&a.runs()}, cb{&b.runs()};
  while (n > 0) {
    const std::uint64_t m = std::min({ca.remaining(), cb.remaining(), n});
    const std::uint64_t explicit_len = std::min(m, ca.period() + cb.period());
    for (std::uint64_t j = 0; j < explicit_len; ++j) {
      if (ca.get(j) != cb.get(j)) return false;
    }
    ca.advance(m);
    cb.advance(m);
    n -= m;
  }
  return true;
}

bool operator==(const RunWord& a, const RunWord& b) {
  return a.size() == b.size() && equal_prefix(a, b, a.size());
}

RunWord apply_alternating(const Substitution& s, const RunWord& w, std::uint64_t phase) {
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  phase %= k;
  RunWord out;
  for (const Run& r : w.runs()) {
    const std::uint64_t len = r.base.size();
    const std::uint64_t g = len % k;
    const std::uint64_t t = g == 0 ? 1 : k / std::gcd(g, k);
    if (r.count >= t) {
      FiniteWord chunk;
      for (std::uint64_t i = 0; i < t; ++i) chunk += r.base;
      out.append(apply_alternating(s, chunk, phase), r.count / t);
    }
    for (std::uint64_t i = 0; i < r.count % t; ++i) {
      out.append(apply_alternating(s, r.base, phase));
      phase = (phase + len) % k;
    }
  }
  return out;
}

RunWord relative_through(const Substitution& s, const std::vector<std::uint64_t>& phases, const RunWord& v) {
  RunWord cur = v;
  for (std::uint64_t p : phases) cur = apply_alternating(s, cur, p);
  return cur;
}

std::vector<std::uint64_t> vanishing_phases(const Substitution& s, const RunWord& w, int max_steps) {
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  std::vector<std::uint64_t> phases;
  std::vector<RunWord> history;
  RunWord cur = w;
  while (!cur.empty()) {
    for (const RunWord& h : history) {
      if (h == cur) throw Error(ErrorCode::kClassificationUnsatisfied, "word never vanishes");
    }
    if (static_cast<int>(phases.size()) >= max_steps) throw Error(ErrorCode::kBudgetExceeded, "vanishing order");
    if (history.size() < 64) history.push_back(cur);
    phases.push_back(cur.size() % k);
    cur = apply_alternating(s, cur, 0);
  }
  return phases;
}

}  // namespace erasing
