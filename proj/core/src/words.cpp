#include "erasing/words.hpp"

#include <algorithm>
#include <numeric>

#include "erasing/error.hpp"

namespace erasing {

namespace {

FiniteWord to_bits(const mpz_class& v, std::uint64_t width) {
  if (width == 0) return {};
  FiniteWord s = v.get_str(2);
  if (s.size() < width) s.insert(0, width - s.size(), '0');
  return s;
}

mpz_class from_bits(const FiniteWord& w) {
  if (w.empty()) return 0;
  return mpz_class(w, 2);
}

mpz_class pow2(std::uint64_t n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n);
  return r;
}

bool two_pow_is_one(std::uint64_t e, const mpz_class& q) {
  const std::uint64_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  if (e < bits) return false;
  if (e <= 4 * bits) {
    // One division beats modular exponentiation for exponents near |q|.
    mpz_class r = pow2(e);
    mpz_tdiv_r(r.get_mpz_t(), r.get_mpz_t(), q.get_mpz_t());
    return r == 1;
  }
  mpz_class r, two = 2, ee;
  mpz_import(ee.get_mpz_t(), 1, 1, sizeof(e), 0, 0, &e);
  mpz_powm(r.get_mpz_t(), two.get_mpz_t(), ee.get_mpz_t(), q.get_mpz_t());
  return r == 1;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

// Multiplicative order of 2 modulo an odd q > 1.
std::uint64_t order_of_two(const mpz_class& q, std::uint64_t hint) {
  // Euler's φ(q) is a multiple of the order; factoring is cheap for small q.
  if (hint == 0 && q.fits_ulong_p() && q.get_ui() < (std::uint64_t{1} << 40)) {
    const std::uint64_t m = q.get_ui();
    hint = m;
    for (std::uint64_t p : prime_factors(m)) hint = hint / p * (p - 1);
  }
  if (hint > 0 && two_pow_is_one(hint, q)) {
    std::uint64_t d = hint;
    for (std::uint64_t p : prime_factors(hint)) {
      while (d % p == 0 && two_pow_is_one(d / p, q)) d /= p;
    }
    return d;
  }
  if (q.fits_ulong_p()) {
    const unsigned long m = q.get_ui();
    unsigned long x = 2 % m;
    std::uint64_t n = 1;
    while (x != 1) {
      x = static_cast<unsigned long>((static_cast<unsigned __int128>(x) * 2) % m);
      ++n;
    }
    return n;
  }
  mpz_class x = 2;
  std::uint64_t n = 1;
  while (x != 1) {
    x = (x * 2) % q;
    ++n;
  }
  return n;
}

}  // namespace

bool is_binary(std::string_view w) {
  return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

std::pair<FiniteWord, std::uint64_t> primitive_root(const FiniteWord& w) {
  const std::size_t n = w.size();
  if (n == 0) return {FiniteWord{}, 0};
  // Full periods of w (divisors d of n with w = (w[0,d))^(n/d)) are closed
  // under gcd, so the least one is reached by dividing out prime factors.
  auto full_period = [&](std::size_t d) { return w.compare(0, n - d, w, d, n - d) == 0; };
  std::size_t p = n, m = n;
  for (std::size_t f = 2; f * f <= m; ++f) {
    if (m % f != 0) continue;
    while (m % f == 0) m /= f;
    while (p % f == 0 && full_period(p / f)) p /= f;
  }
  if (m > 1)
    while (p % m == 0 && full_period(p / m)) p /= m;
  return {w.substr(0, p), n / p};
}

PeriodicWord::PeriodicWord(FiniteWord p, FiniteWord c) : prefix(std::move(p)), cycle(std::move(c)) {
  if (cycle.empty()) throw Error(ErrorCode::kInvalidArgument, "empty cycle");
  if (!is_binary(prefix) || !is_binary(cycle)) throw Error(ErrorCode::kBadSymbol, "non-binary word");
}

PeriodicWord PeriodicWord::canonical() const {
  PeriodicWord r;
  r.cycle = primitive_root(cycle).first;
  const std::size_t c = r.cycle.size();
  std::size_t a = 0;
  while (a < prefix.size() && prefix[prefix.size() - 1 - a] == r.cycle[(c - 1 - a % c)]) ++a;
  r.prefix = prefix.substr(0, prefix.size() - a);
  const std::size_t rot = a % c;
  if (rot != 0) r.cycle = r.cycle.substr(c - rot) + r.cycle.substr(0, c - rot);
  return r;
}

bool PeriodicWord::is_canonical() const {
  const PeriodicWord c = canonical();
  return c.prefix == prefix && c.cycle == cycle;
}

char PeriodicWord::at(std::uint64_t i) const {
  if (i < prefix.size()) return prefix[i];
  return cycle[(i - prefix.size()) % cycle.size()];
}

FiniteWord PeriodicWord::take(std::uint64_t n) const {
  FiniteWord out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(at(i));
  return out;
}

PeriodicWord PeriodicWord::drop(std::uint64_t n) const {
  if (n <= prefix.size()) return PeriodicWord(prefix.substr(n), cycle);
  const std::uint64_t r = (n - prefix.size()) % cycle.size();
  return PeriodicWord({}, cycle.substr(r) + cycle.substr(0, r));
}

std::string PeriodicWord::to_string() const { return "0b0." + prefix + "(" + cycle + ")"; }

bool operator==(const PeriodicWord& a, const PeriodicWord& b) {
  const PeriodicWord ca = a.canonical();
  const PeriodicWord cb = b.canonical();
  return ca.prefix == cb.prefix && ca.cycle == cb.cycle;
}

UnitReal::UnitReal(const mpz_class& num, const mpz_class& den) : num_(num), den_(den) {
  if (den_ <= 0 || num_ < 0 || num_ > den_) throw Error(ErrorCode::kBadLiteral, "point outside [0,1]");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  if (num_ == 0) {
    den_ = 1;
  } else {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

UnitReal::UnitReal(const mpq_class& q) : UnitReal(q.get_num(), q.get_den()) {}

UnitReal UnitReal::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
  if (s.rfind("0b0.", 0) == 0) {
    const auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
      throw Error(ErrorCode::kBadLiteral, std::string(text));
    const FiniteWord p = s.substr(4, open - 4);
    const FiniteWord c = s.substr(open + 1, s.size() - open - 2);
    if (c.empty() || !is_binary(p) || !is_binary(c)) throw Error(ErrorCode::kBadLiteral, std::string(text));
    return value_of(PeriodicWord(p, c));
  }
  const auto slash = s.find('/');
  const std::string ns = s.substr(0, slash);
  const std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto digits = [](const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (!digits(ns) || !digits(ds)) throw Error(ErrorCode::kBadLiteral, std::string(text));
  const mpz_class n(ns, 10), d(ds, 10);
  if (d == 0 || n > d) throw Error(ErrorCode::kBadLiteral, std::string(text));
  return UnitReal(n, d);
}

mpq_class UnitReal::to_mpq() const { return mpq_class(num_, den_); }

bool UnitReal::is_dyadic() const { return mpz_popcount(den_.get_mpz_t()) == 1; }

std::string UnitReal::to_fraction() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::strong_ordering operator<=>(const UnitReal& a, const UnitReal& b) {
  const int c = cmp(a.to_mpq(), b.to_mpq());
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Expansion to_tilde(const UnitReal& x) {
  if (x.is_zero()) return Zero{};
  const std::uint64_t a = mpz_scan1(x.den().get_mpz_t(), 0);
  mpz_class q = x.den() >> a;
  if (q == 1) {
    return PeriodicWord(to_bits(x.num() - 1, a), "1").canonical();
  }
  const std::uint64_t c = order_of_two(q, x.period_hint());
  // x·2^a = I + r/q with r/q = C/(2^c - 1).
  mpz_class i, r;
  mpz_fdiv_qr(i.get_mpz_t(), r.get_mpz_t(), x.num().get_mpz_t(), q.get_mpz_t());
  const mpz_class cyc = r * (pow2(c) - 1) / q;
  return PeriodicWord(to_bits(i, a), to_bits(cyc, c)).canonical();
}

UnitReal value_of(const PeriodicWord& w) {
  const std::uint64_t c = w.cycle.size();
  const mpz_class m = pow2(c) - 1;
  const mpz_class num = from_bits(w.prefix) * m + from_bits(w.cycle);
  const mpz_class den = pow2(w.prefix.size()) * m;
  UnitReal r(num, den);
  r.set_period_hint(c);
  return r;
}

UnitReal value_of(const Expansion& e) {
  if (std::holds_alternative<Zero>(e)) return UnitReal();
  return value_of(std::get<PeriodicWord>(e));
}

UnitReal value_of_finite(const FiniteWord& w) { return UnitReal(from_bits(w), pow2(w.size())); }

std::string to_string(const Expansion& e) {
  if (std::holds_alternative<Zero>(e)) return "0b0.(0)";
  return std::get<PeriodicWord>(e).to_string();
}

std::string render_point(const UnitReal& x) { return x.to_fraction() + "  " + to_string(to_tilde(x)); }

PeriodicWord block_align(const PeriodicWord& w, int k) {
  const std::uint64_t uk = static_cast<std::uint64_t>(k);
  const std::uint64_t lp = (w.prefix.size() + uk - 1) / uk * uk;
  const std::uint64_t lc = std::lcm<std::uint64_t>(w.cycle.size(), uk);
  FiniteWord p = w.take(lp);
  FiniteWord c;
  c.reserve(lc);
  for (std::uint64_t i = 0; i < lc; ++i) c.push_back(w.at(lp + i));
  return PeriodicWord(std::move(p), std::move(c));
}

bool has_k_factor(const FiniteWord& w, const FiniteWord& u, int k) {
  for (std::size_t i = 0; i + u.size() <= w.size(); i += static_cast<std::size_t>(k)) {
    if (w.compare(i, u.size(), u) == 0) return true;
  }
  return false;
}

bool has_k_factor(const PeriodicWord& w, const FiniteWord& u, int k) {
  const std::uint64_t uk = static_cast<std::uint64_t>(k);
  const std::uint64_t limit = w.prefix.size() + std::lcm<std::uint64_t>(w.cycle.size(), uk) + uk;
  for (std::uint64_t i = 0; i <= limit; i += uk) {
    bool match = true;
    for (std::uint64_t j = 0; j < u.size() && match; ++j) match = w.at(i + j) == u[j];
    if (match) return true;
  }
  return false;
}

std::vector<FiniteWord> k_extensions(const FiniteWord& w, int k) {
  const std::size_t r = w.size() % static_cast<std::size_t>(k);
  if (r == 0) return {FiniteWord{}};
  const std::size_t n = static_cast<std::size_t>(k) - r;
  std::vector<FiniteWord> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    FiniteWord e(n, '0');
    for (std::size_t i = 0; i < n; ++i) {
      if ((v >> (n - 1 - i)) & 1) e[i] = '1';
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<FiniteWord> k_roundings(const FiniteWord& w, int k) {
  std::vector<FiniteWord> out;
  for (const FiniteWord& e : k_extensions(w, k)) out.push_back(w + e);
  return out;
}

}  // namespace erasing
