#include "erasing/oracle.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace erasing::oracle {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

std::size_t block_value(const FiniteWord& b) {
  std::size_t v = 0;
  for (char c : b) v = 2 * v + (c == '1');
  return v;
}

FiniteWord block_of(std::size_t v, int k) {
  FiniteWord w(static_cast<std::size_t>(k), '0');
  for (int i = k - 1; i >= 0; --i, v >>= 1) w[static_cast<std::size_t>(i)] = (v & 1) ? '1' : '0';
  return w;
}

mpq_class word_value(const FiniteWord& p, const FiniteWord& c) {
  mpq_class v(mpz_class(p.empty() ? "0" : p, 2), mpz_class(1) << p.size());
  if (!c.empty()) {
    mpq_class cyc(mpz_class(c, 2), (mpz_class(1) << c.size()) - 1);
    v += cyc / mpq_class(mpz_class(1) << p.size());
  }
  v.canonicalize();
  return v;
}

bool is_dyadic(const mpz_class& den) { return (den & (den - 1)) == 0; }

// Digits of x̃ one at a time, with a state that determines all later digits.
class Digits {
 public:
  explicit Digits(const mpq_class& x) : num_(x.get_num()), den_(x.get_den()) {
    if (num_ != 0 && is_dyadic(den_)) {
      dyadic_ = true;
      bits_ = mpz_sizeinbase(den_.get_mpz_t(), 2) - 1;
      head_ = bits_ == 0 ? FiniteWord() : mpz_class(num_ - 1).get_str(2);
      if (head_.size() < bits_) head_.insert(0, bits_ - head_.size(), '0');
    }
    r_ = num_;
  }

  char next() {
    ++pos_;
    if (num_ == 0) return '0';
    if (dyadic_) return pos_ <= bits_ ? head_[pos_ - 1] : '1';
    r_ *= 2;
    if (r_ >= den_) {
      r_ -= den_;
      return '1';
    }
    return '0';
  }

  std::string state(int k) const {
    if (num_ == 0) return "z";
    if (dyadic_) return pos_ < bits_ ? "p" + std::to_string(pos_) : "t" + std::to_string((pos_ - bits_) % k);
    return r_.get_str(16);
  }

 private:
  mpz_class num_, den_, r_;
  bool dyadic_ = false;
  std::size_t bits_ = 0;
  std::size_t pos_ = 0;
  FiniteWord head_;
};

}  // namespace

Table Table::read(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Table t;
  std::map<std::size_t, FiniteWord> rows;
  std::string raw;
  while (std::getline(in, raw)) {
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (t.k == 0) {
      t.k = std::stoi(line.substr(line.find('=') + 1));
      continue;
    }
    const auto arrow = line.find("->");
    const std::string img = trim(line.substr(arrow + 2));
    rows[block_value(trim(line.substr(0, arrow)))] = img == "-" ? "" : img;
  }
  for (const auto& [b, img] : rows) t.images.push_back(img);
  if (t.images.size() != (std::size_t{1} << t.k)) throw std::runtime_error("incomplete table " + path);
  return t;
}

FiniteWord Table::w_eps() const {
  for (std::size_t b = 0; b < images.size(); ++b)
    if (images[b].empty()) return block_of(b, k);
  return {};
}

FiniteWord brute_block(const Table& t, const FiniteWord& w) {
  FiniteWord out;
  const std::size_t k = static_cast<std::size_t>(t.k);
  for (std::size_t i = 0; i + k <= w.size(); i += k) out += t.images[block_value(w.substr(i, k))];
  return out;
}

std::pair<FiniteWord, FiniteWord> brute_tilde(const mpq_class& x) {
  if (x == 0) return {"", "0"};
  const mpz_class num = x.get_num(), den = x.get_den();
  FiniteWord pre, cyc;
  if (is_dyadic(den)) {
    const std::size_t bits = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    pre = bits == 0 ? FiniteWord() : mpz_class(num - 1).get_str(2);
    if (pre.size() < bits) pre.insert(0, bits - pre.size(), '0');
    cyc = "1";
  } else {
    std::map<mpz_class, std::size_t> seen;
    FiniteWord bits;
    mpz_class r = num;
    while (!seen.count(r)) {
      seen[r] = bits.size();
      r *= 2;
      if (r >= den) {
        bits += '1';
        r -= den;
      } else {
        bits += '0';
      }
    }
    pre = bits.substr(0, seen[r]);
    cyc = bits.substr(seen[r]);
  }
  for (std::size_t p = 1; p <= cyc.size(); ++p) {
    if (cyc.size() % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < cyc.size() && ok; ++i) ok = cyc[i] == cyc[i - p];
    if (ok) {
      cyc.resize(p);
      break;
    }
  }
  while (!pre.empty() && pre.back() == cyc.back()) {
    pre.pop_back();
    std::rotate(cyc.rbegin(), cyc.rbegin() + 1, cyc.rend());
  }
  return {pre, cyc};
}

StreamEvaluation brute_eval(const Table& t, const UnitReal& x, std::uint64_t bits) {
  StreamEvaluation ev;
  ev.requested_bits = bits;
  const mpq_class q = x.to_mpq();
  if (q == 0) {
    ev.produced.assign(bits, '0');
    ev.exact = 0;
    return ev;
  }
  Digits d(q);
  const std::size_t k = static_cast<std::size_t>(t.k);
  std::map<std::string, std::size_t> first_visit;
  while (ev.produced.size() < bits) {
    const std::string st = d.state(t.k);
    const auto [it, fresh] = first_visit.emplace(st, ev.produced.size());
    if (!fresh) {
      const FiniteWord loop = ev.produced.substr(it->second);
      if (!ev.exact) ev.exact = word_value(ev.produced.substr(0, it->second), loop);
      if (loop.empty()) {
        ev.stalled = true;
        break;
      }
    }
    FiniteWord block;
    for (std::size_t i = 0; i < k; ++i) block += d.next();
    ev.consumed_input_bits += k;
    ev.produced += t.images[block_value(block)];
  }
  return ev;
}

std::optional<std::vector<std::pair<FiniteWord, FiniteWord>>> brute_simple(const Table& t) {
  std::size_t longest = 0;
  for (const auto& v : t.images) longest = std::max(longest, v.size());
  std::vector<FiniteWord> cands{""};
  for (std::size_t len = 1; len <= longest; ++len)
    for (std::size_t v = 0; v < (std::size_t{1} << len); ++v) cands.push_back(block_of(v, static_cast<int>(len)));
  std::vector<std::pair<FiniteWord, FiniteWord>> partial;
  const std::size_t k = static_cast<std::size_t>(t.k);
  auto consistent = [&] {
    for (std::size_t b = 0; b < t.images.size(); ++b) {
      const FiniteWord blk = block_of(b, t.k);
      FiniteWord pre;
      for (std::size_t j = 0; j < partial.size(); ++j) pre += blk[j] == '1' ? partial[j].second : partial[j].first;
      if (t.images[b].compare(0, pre.size(), pre) != 0 || pre.size() > t.images[b].size()) return false;
      if (partial.size() == k && pre != t.images[b]) return false;
    }
    return true;
  };
  std::function<bool()> rec = [&]() -> bool {
    if (partial.size() == k) return true;
    for (const auto& a : cands) {
      for (const auto& b : cands) {
        partial.emplace_back(a, b);
        if (consistent() && rec()) return true;
        partial.pop_back();
      }
    }
    return false;
  };
  if (!rec()) return std::nullopt;
  return partial;
}

FiniteWord brute_alt(const std::vector<std::pair<FiniteWord, FiniteWord>>& simple, const FiniteWord& w) {
  FiniteWord out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& m = simple[i % simple.size()];
    out += w[i] == '1' ? m.second : m.first;
  }
  return out;
}

VanishOutcome brute_vanishing(const Table& t, const FiniteWord& w, int max_steps) {
  const auto simple = brute_simple(t);
  if (!simple) return NotAlternating{};
  return brute_vanishing(*simple, w, max_steps);
}

VanishOutcome brute_vanishing(const std::vector<std::pair<FiniteWord, FiniteWord>>& simple, const FiniteWord& w,
                              int max_steps) {
  std::set<FiniteWord> history;
  FiniteWord cur = w;
  int n = 0;
  while (!cur.empty()) {
    if (!history.insert(cur).second || n >= max_steps) return NoVanish{cur};
    cur = brute_alt(simple, cur);
    ++n;
  }
  return n;
}

Coverage brute_factor_coverage(const std::vector<FiniteWord>& images, int L) {
  std::vector<FiniteWord> imgs;
  for (const auto& v : images)
    if (!v.empty()) imgs.push_back(v);
  for (int len = 0; len <= L; ++len) {
    for (std::size_t v = 0; v < (std::size_t{1} << len); ++v) {
      const FiniteWord w = len == 0 ? FiniteWord() : block_of(v, len);
      std::vector<char> reach(w.size() + 1, 0);
      reach[0] = 1;
      bool ok = w.empty();
      for (std::size_t pos = 0; pos < w.size() && !ok; ++pos) {
        if (!reach[pos]) continue;
        for (const auto& img : imgs) {
          const std::size_t n = std::min(img.size(), w.size() - pos);
          if (w.compare(pos, n, img, 0, n) != 0) continue;
          if (pos + img.size() >= w.size()) {
            ok = true;
            break;
          }
          reach[pos + img.size()] = 1;
        }
      }
      if (!ok) return {false, w};
    }
  }
  return {};
}

std::vector<std::string> derived_constants(const std::string& data_dir) {
  std::map<int, Table> S;
  for (int i = 1; i <= 4; ++i) S[i] = Table::read(data_dir + "/sigma" + std::to_string(i) + ".sub");
  const Table &s2 = S[2], &s3 = S[3], &s4 = S[4];
  const auto simple3 = *brute_simple(s3);
  const auto simple4 = *brute_simple(s4);
  std::vector<std::string> out;
  auto put = [&](const std::string& key, const std::string& val) { out.push_back(key + " = " + val); };
  auto vanish = [&](const Table& t, const FiniteWord& w) {
    return std::get<int>(brute_vanishing(&t == &s3 ? simple3 : simple4, w, 10000));
  };
  auto words = [](int len) {
    std::vector<FiniteWord> ws;
    for (std::size_t v = 0; v < (std::size_t{1} << len); ++v) ws.push_back(len == 0 ? FiniteWord() : block_of(v, len));
    return ws;
  };
  auto f = [&](const Table& t, const std::string& x) { return *brute_eval(t, UnitReal::parse(x), 4096).exact; };
  auto tilde = [](const std::string& x) {
    const auto [p, c] = brute_tilde(UnitReal::parse(x).to_mpq());
    return p + "(" + c + ")";
  };
  auto rel = [&](const FiniteWord& u, int n, const FiniteWord& v) {
    FiniteWord a = u + v, b = u;
    for (int i = 0; i < n; ++i) {
      a = brute_alt(simple3, a);
      b = brute_alt(simple3, b);
    }
    return a.substr(b.size());
  };

  put("tilde.1/3", tilde("1/3"));
  put("tilde.1/2", tilde("1/2"));
  put("align.1(011).k2.first12", PeriodicWord("1", "011").take(12));
  put("s3.block.1101", brute_block(s3, "1101"));
  put("s3.alt.111", brute_alt(simple3, "111"));
  put("s3.rel.u1.n1.v1", rel("1", 1, "1"));
  put("s3.rel.u11.n2.v11", rel("11", 2, "11"));
  for (const char* w : {"00", "01", "10", "11", "0", "1"}) put(std::string("s3.vanish.") + w, std::to_string(vanish(s3, w)));
  for (int kl : {1, 2, 4, 8, 16}) {
    int best = 0;
    for (const auto& w : words(kl)) best = std::max(best, vanish(s3, w));
    put("s3.F." + std::to_string(kl), std::to_string(best));
  }
  int f3 = 0;
  for (const auto& w : words(3)) f3 = std::max(f3, vanish(s4, w));
  put("s4.F.3", std::to_string(f3));
  int m = 0;
  for (int len = 0; len <= 12; ++len)
    for (const auto& w : words(len)) m = std::max(m, vanish(s4, w));
  put("s4.maxvanish.upto12", std::to_string(m));
  for (const char* x : {"1", "1/3", "2/3", "1/2"}) put(std::string("s3.f.") + x, f(s3, x).get_str());
  put("s2.f.1/3", f(s2, "1/3").get_str());
  put("s3.stream.1.8", brute_eval(s3, UnitReal::parse("1"), 8).produced.substr(0, 8));
  put("s3.stream.1/2.4", brute_eval(s3, UnitReal::parse("1/2"), 4).produced.substr(0, 4));
  auto lift = [&](const FiniteWord& t) {
    for (std::size_t n = 0;; ++n) {
      const std::size_t count = std::size_t{1} << (n * static_cast<std::size_t>(s3.k));
      for (std::size_t v = 0; v < count; ++v) {
        const FiniteWord p = n == 0 ? FiniteWord() : block_of(v, static_cast<int>(n) * s3.k);
        if (brute_block(s3, p).compare(0, t.size(), t) == 0 && brute_block(s3, p).size() >= t.size()) return p;
      }
    }
  };
  put("s3.lift_prefix.10", lift("10"));
  put("s3.lift_prefix.0", lift("0"));
  {
    Digits d(mpq_class(1, 3));
    FiniteWord bits;
    for (int i = 0; i < 10; ++i) bits += d.next();
    put("s3.sens.1/3.bits10.n", std::to_string(vanish(s3, bits)));
  }
  for (int i = 1; i <= 4; ++i) {
    const Coverage c = brute_factor_coverage(S[i].images, i == 4 ? 1 : 12);
    put("s" + std::to_string(i) + ".cover", c.complete ? "yes" : "no:" + c.failure);
  }
  {
    const mpq_class a = abs(mpq_class(1) - mpq_class(1, 3));
    const mpq_class b = abs(f(s3, "1") - f(s3, "1/3"));
    put("s3.d1.1.1/3", std::max(a, b).get_str());
  }
  auto rep = [](const std::string& w, int n) {
    std::string o;
    for (int i = 0; i < n; ++i) o += w;
    return o;
  };
  put("s2.strip.(0110)", brute_block(s2, rep("0110", 4)) + "|" + brute_block(s2, rep("10", 8)));
  put("s1.cycle.110", brute_block(S[1], "110") + "," + brute_block(S[1], brute_block(S[1], "110")));
  auto show = [](const std::vector<std::pair<FiniteWord, FiniteWord>>& sm) {
    std::string o;
    for (std::size_t i = 0; i < sm.size(); ++i) {
      o += (i ? ";" : "") + (sm[i].first.empty() ? std::string("-") : sm[i].first) + "," +
           (sm[i].second.empty() ? std::string("-") : sm[i].second);
    }
    return o;
  };
  put("s3.simple", show(simple3));
  put("s4.simple", show(simple4));
  return out;
}

}  // namespace erasing::oracle
