#include "erasing/substitution.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "erasing/error.hpp"

namespace erasing {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

char bit_of(std::size_t block, int k, int position) {
  return ((block >> (k - 1 - position)) & 1) ? '1' : '0';
}

// Position split consistent with the images of the given blocks, if any.
std::optional<AlternatingDecomposition> solve_split(int k, const std::vector<FiniteWord>& images,
                                                    const std::vector<std::size_t>& blocks) {
  std::vector<std::size_t> used(images.size(), 0);
  AlternatingDecomposition dec;
  dec.simple.assign(static_cast<std::size_t>(k), {FiniteWord{}, FiniteWord{}});

  // Candidate image of letter a at position i, or nullopt when blocks disagree.
  auto candidate = [&](int i, int a, std::size_t len) -> std::optional<FiniteWord> {
    std::optional<FiniteWord> out;
    for (std::size_t b : blocks) {
      if ((bit_of(b, k, i) == '1') != (a == 1)) continue;
      const FiniteWord& img = images[b];
      const bool last = i == k - 1;
      if (used[b] + len > img.size()) return std::nullopt;
      if (last && used[b] + len != img.size()) return std::nullopt;
      FiniteWord piece = img.substr(used[b], len);
      if (out && *out != piece) return std::nullopt;
      out = std::move(piece);
    }
    if (!out) out = FiniteWord{};
    return out;
  };
  auto has_letter = [&](int i, int a) {
    return std::any_of(blocks.begin(), blocks.end(),
                       [&](std::size_t b) { return (bit_of(b, k, i) == '1') == (a == 1); });
  };
  std::size_t max_len = 0;
  for (std::size_t b : blocks) max_len = std::max(max_len, images[b].size());

  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == k) return true;
    const std::size_t l0max = has_letter(i, 0) ? max_len : 0;
    const std::size_t l1max = has_letter(i, 1) ? max_len : 0;
    for (std::size_t l0 = 0; l0 <= l0max; ++l0) {
      auto c0 = candidate(i, 0, l0);
      if (!c0) continue;
      for (std::size_t l1 = 0; l1 <= l1max; ++l1) {
        auto c1 = candidate(i, 1, l1);
        if (!c1) continue;
        for (std::size_t b : blocks) used[b] += bit_of(b, k, i) == '1' ? l1 : l0;
        dec.simple[static_cast<std::size_t>(i)] = {*c0, *c1};
        if (rec(i + 1)) return true;
        for (std::size_t b : blocks) used[b] -= bit_of(b, k, i) == '1' ? l1 : l0;
      }
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return dec;
}

}  // namespace

Substitution::Substitution(int k, std::vector<FiniteWord> images) : k_(k), images_(std::move(images)) {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i].empty()) eps_index_ = i;
    max_image_length_ = std::max(max_image_length_, images_[i].size());
  }
  w_eps_ = block_word(eps_index_);
  std::vector<std::size_t> all(images_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  decomposition_ = solve_split(k_, images_, all);
}

Substitution Substitution::from_table(int k, std::vector<FiniteWord> images) {
  if (k < 2 || k > 16) throw Error(ErrorCode::kBadSymbol, "block size must lie in [2,16]");
  if (images.size() != (std::size_t{1} << k)) throw Error(ErrorCode::kMissingBlock, "table needs 2^k images");
  std::optional<std::size_t> eps;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!is_binary(images[i])) throw Error(ErrorCode::kBadSymbol, "image of block " + std::to_string(i));
    if (images[i].empty()) {
      if (eps) throw Error(ErrorCode::kMultipleEmptyImages, "blocks " + std::to_string(*eps) + " and " + std::to_string(i));
      eps = i;
    }
  }
  if (!eps) throw Error(ErrorCode::kNoEmptyImage, "");
  if (*eps == images.size() - 1) throw Error(ErrorCode::kErasedBlockIsAllOnes, "");
  return Substitution(k, std::move(images));
}

Substitution Substitution::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  int k = 0;
  std::vector<std::optional<FiniteWord>> table;
  std::vector<int> lines;
  std::optional<std::size_t> eps;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    line = trim(line);
    if (line.empty()) continue;
    if (k == 0) {
      const auto eq = line.find('=');
      if (eq == std::string::npos || trim(line.substr(0, eq)) != "k")
        throw Error(ErrorCode::kBadSymbol, "expected 'k = <int>'", line_no);
      const std::string v = trim(line.substr(eq + 1));
      if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
          v.size() > 2)
        throw Error(ErrorCode::kBadSymbol, "bad block size '" + v + "'", line_no);
      k = std::stoi(v);
      if (k < 2 || k > 16) throw Error(ErrorCode::kBadSymbol, "block size must lie in [2,16]", line_no);
      table.assign(std::size_t{1} << k, std::nullopt);
      lines.assign(table.size(), 0);
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Error(ErrorCode::kBadSymbol, "expected 'BLOCK -> IMAGE'", line_no);
    const std::string block = trim(line.substr(0, arrow));
    std::string image = trim(line.substr(arrow + 2));
    if (block.size() != static_cast<std::size_t>(k) || !is_binary(block))
      throw Error(ErrorCode::kBadSymbol, "bad block '" + block + "'", line_no);
    if (image == "-") {
      image.clear();
    } else if (image.empty() || !is_binary(image)) {
      throw Error(ErrorCode::kBadSymbol, "bad image '" + image + "'", line_no);
    }
    const std::size_t idx = std::stoul(block, nullptr, 2);
    if (table[idx]) throw Error(ErrorCode::kDuplicateBlock, "block " + block + " first defined at line " +
                                                                std::to_string(lines[idx]), line_no);
    if (image.empty()) {
      if (eps) throw Error(ErrorCode::kMultipleEmptyImages, "block " + block + " and line " +
                                                               std::to_string(lines[*eps]), line_no);
      eps = idx;
      if (idx == table.size() - 1) throw Error(ErrorCode::kErasedBlockIsAllOnes, "block " + block, line_no);
    }
    table[idx] = image;
    lines[idx] = line_no;
  }
  if (k == 0) throw Error(ErrorCode::kBadSymbol, "missing 'k = <int>'", line_no);
  std::vector<FiniteWord> images;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i]) {
      FiniteWord b(static_cast<std::size_t>(k), '0');
      for (int j = 0; j < k; ++j) b[static_cast<std::size_t>(j)] = bit_of(i, k, j);
      throw Error(ErrorCode::kMissingBlock, "block " + b, line_no);
    }
    images.push_back(*table[i]);
  }
  if (!eps) throw Error(ErrorCode::kNoEmptyImage, "", line_no);
  return Substitution(k, std::move(images));
}

Substitution Substitution::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

FiniteWord Substitution::eps_letters(std::uint64_t start, std::uint64_t n) const {
  FiniteWord out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(eps_letter(start + i));
  return out;
}

FiniteWord Substitution::block_word(std::size_t index) const {
  FiniteWord b(static_cast<std::size_t>(k_), '0');
  for (int j = 0; j < k_; ++j) b[static_cast<std::size_t>(j)] = bit_of(index, k_, j);
  return b;
}

std::size_t Substitution::block_index(std::string_view block) const {
  std::size_t idx = 0;
  for (char c : block) idx = (idx << 1) | (c == '1' ? 1u : 0u);
  return idx;
}

std::string Substitution::to_spec() const {
  std::string out = "k = " + std::to_string(k_) + "\n";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out += block_word(i) + " -> " + (images_[i].empty() ? std::string("-") : images_[i]) + "\n";
  }
  return out;
}

std::variant<AlternatingDecomposition, NotAlternating> alternating_decomposition(const Substitution& s) {
  if (s.decomposition()) return *s.decomposition();
  std::vector<std::size_t> blocks(s.block_count());
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i] = i;
  for (std::size_t i = blocks.size(); i-- > 0;) {
    std::vector<std::size_t> trial = blocks;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (!solve_split(s.k(), s.images(), trial)) blocks = std::move(trial);
  }
  return NotAlternating{blocks};
}

FiniteWord apply_strict(const Substitution& s, const FiniteWord& w) {
  const std::size_t k = static_cast<std::size_t>(s.k());
  FiniteWord out;
  for (std::size_t i = 0; i + k <= w.size(); i += k) out += s.image(std::string_view(w).substr(i, k));
  return out;
}

FiniteWord apply_alternating(const Substitution& s, const FiniteWord& w, std::uint64_t phase) {
  if (!s.decomposition()) throw Error(ErrorCode::kNotAlternatingRequired, "");
  const auto& dec = *s.decomposition();
  const std::uint64_t k = static_cast<std::uint64_t>(s.k());
  FiniteWord out;
  std::uint64_t p = phase % k;
  for (char c : w) {
    out += dec.letter(p, c);
    if (++p == k) p = 0;
  }
  return out;
}

FiniteWord apply_finite(const Substitution& s, const FiniteWord& w, ApplyMode mode) {
  if (mode == ApplyMode::kStrict || (mode == ApplyMode::kAuto && !s.is_alternating())) return apply_strict(s, w);
  return apply_alternating(s, w, 0);
}

PeriodicImage apply_periodic(const Substitution& s, const PeriodicWord& w) {
  const PeriodicWord a = block_align(w, s.k());
  FiniteWord p = apply_strict(s, a.prefix);
  FiniteWord c = apply_strict(s, a.cycle);
  if (c.empty()) return p;
  return PeriodicWord(std::move(p), std::move(c)).canonical();
}

FiniteWord relative_image(const Substitution& s, const FiniteWord& u, int n, const FiniteWord& v) {
  if (!s.is_alternating()) throw Error(ErrorCode::kNotAlternatingRequired, "");
  FiniteWord base = u;
  FiniteWord rel = v;
  for (int i = 0; i < n; ++i) {
    rel = apply_alternating(s, rel, base.size());
    base = apply_alternating(s, base, 0);
  }
  return rel;
}

StrictRelativeImage relative_image_strict(const Substitution& s, const FiniteWord& u, int n,
                                          const FiniteWord& v) {
  const std::size_t k = static_cast<std::size_t>(s.k());
  StrictRelativeImage out;
  FiniteWord base = u;
  FiniteWord rel = v;
  for (int i = 0; i < n; ++i) {
    const std::size_t need = (k - base.size() % k) % k;
    if (rel.size() < need)
      throw Error(ErrorCode::kInsufficientInput, "stage " + std::to_string(i + 1) + " needs " +
                                                     std::to_string(need) + " letters, has " +
                                                     std::to_string(rel.size()));
    FiniteWord ext = rel.substr(0, need);
    base = apply_strict(s, base + ext);
    const FiniteWord rest = rel.substr(need);
    out.dropped.push_back(rest.size() % k);
    rel = apply_strict(s, rest);
    out.consumed.push_back(std::move(ext));
  }
  out.image = std::move(rel);
  return out;
}

}  // namespace erasing
