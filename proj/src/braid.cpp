#include "hurwitz/braid.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hurwitz {

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::transposition(std::size_t degree, int i, int j) {
  Permutation p(degree);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  assert(next.degree() == degree());
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out.images_[k] = next.images_[images_[k]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) out.images_[images_[k]] = static_cast<int>(k);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] != static_cast<int>(k)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int k = static_cast<int>(start); !seen[k]; k = images_[k]) {
      seen[k] = true;
      cycle.push_back(k);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::cycle_count() const { return cycles().size(); }

std::uint64_t Permutation::order() const {
  std::uint64_t r = 1;
  for (const auto& c : cycles()) r = std::lcm(r, static_cast<std::uint64_t>(c.size()));
  return r;
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out(images_);
  for (int& v : out) ++v;
  return out;
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> zero(images);
  for (int& v : zero) --v;
  return Permutation(std::move(zero));
}

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int degree) : degree_(degree) {
  if (degree < 1) throw std::invalid_argument("braid degree must be at least 1");
}

BraidWord::BraidWord(int degree, std::vector<Letter> letters)
    : degree_(degree), letters_(std::move(letters)) {
  if (degree < 1) throw std::invalid_argument("braid degree must be at least 1");
  for (const Letter& l : letters_) {
    if (l.index < 1 || l.index > degree_ - 1 || (l.sign != 1 && l.sign != -1))
      throw std::invalid_argument("generator sigma_" + std::to_string(l.index) +
                                  " is not in B_" + std::to_string(degree_));
  }
}

BraidWord BraidWord::from_tokens(int degree, const std::vector<int>& tokens) {
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  for (int t : tokens) {
    if (t == 0) throw std::invalid_argument("generator token 0 is not allowed");
    letters.push_back({t > 0 ? t : -t, t > 0 ? 1 : -1});
  }
  return BraidWord(degree, std::move(letters));
}

BraidWord BraidWord::generator(int degree, int index, int sign) {
  return BraidWord(degree, {{index, sign}});
}

std::vector<int> BraidWord::tokens() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) out.push_back(l.sign * l.index);
  return out;
}

std::string BraidWord::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(letters_[k].sign * letters_[k].index);
  }
  return out;
}

int BraidWord::max_index() const {
  int m = 0;
  for (const Letter& l : letters_) m = std::max(m, l.index);
  return m;
}

BraidWord parse_word(std::string_view text, int degree) {
  if (degree < 1) throw ParseError("braid degree must be at least 1");
  std::vector<Letter> letters;
  std::size_t pos = 0;
  auto is_sep = [](char c) { return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    std::string_view digits = token;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
      throw ParseError("invalid generator token '" + std::string(token) + "'");
    int index = value < 0 ? -value : value;
    if (value == 0 || index >= degree)
      throw ParseError("generator token '" + std::string(token) + "' is out of range for B_" +
                       std::to_string(degree));
    letters.push_back({index, value > 0 ? 1 : -1});
    pos = end;
  }
  return BraidWord(degree, std::move(letters));
}

// ---------------------------------------------------------------------------
// Group operations

Permutation permutation(const BraidWord& b) {
  // pos_to_strand[p] is the strand currently at position p.
  std::vector<int> pos_to_strand(b.degree());
  std::iota(pos_to_strand.begin(), pos_to_strand.end(), 0);
  for (const Letter& l : b.letters()) std::swap(pos_to_strand[l.index - 1], pos_to_strand[l.index]);
  std::vector<int> images(b.degree());
  for (int p = 0; p < b.degree(); ++p) images[pos_to_strand[p]] = p;
  return Permutation(std::move(images));
}

std::uint64_t permutation_order(const BraidWord& b) { return permutation(b).order(); }

int exponent_sum(const BraidWord& b) {
  int s = 0;
  for (const Letter& l : b.letters()) s += l.sign;
  return s;
}

namespace {

void require_same_degree(const BraidWord& a, const BraidWord& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("braids of degree " + std::to_string(a.degree()) + " and " +
                         std::to_string(b.degree()) + " cannot be combined");
}

}  // namespace

BraidWord product(const BraidWord& a, const BraidWord& b) {
  require_same_degree(a, b);
  std::vector<Letter> letters(a.letters());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.degree(), std::move(letters));
}

BraidWord product(const std::vector<BraidWord>& factors, int degree) {
  std::vector<Letter> letters;
  for (const BraidWord& f : factors) {
    if (f.degree() != degree)
      throw DegreeMismatch("factor of degree " + std::to_string(f.degree()) +
                           " in a product over B_" + std::to_string(degree));
    letters.insert(letters.end(), f.letters().begin(), f.letters().end());
  }
  return BraidWord(degree, std::move(letters));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<Letter> letters;
  letters.reserve(b.length());
  for (auto it = b.letters().rbegin(); it != b.letters().rend(); ++it)
    letters.push_back({it->index, -it->sign});
  return BraidWord(b.degree(), std::move(letters));
}

BraidWord power(const BraidWord& b, long long k) {
  const BraidWord base = k < 0 ? inverse(b) : b;
  const long long n = k < 0 ? -k : k;
  std::vector<Letter> letters;
  letters.reserve(base.length() * static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i)
    letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(b.degree(), std::move(letters));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& a) {
  require_same_degree(a, b);
  return product(product(inverse(a), b), a);
}

BraidWord free_reduce(const BraidWord& b) {
  std::vector<Letter> out;
  out.reserve(b.length());
  for (const Letter& l : b.letters()) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return BraidWord(b.degree(), std::move(out));
}

BraidWord iota(const BraidWord& b) { return BraidWord(b.degree() + 1, b.letters()); }

// ---------------------------------------------------------------------------
// Left normal form
//
// A permutation braid is stored as its braid permutation.  With images[k]
// the bottom position of the strand starting at top position k:
//   sigma_i is a left divisor of A    iff images[i] > images[i+1]
//   sigma_i is a right divisor of A   iff inv[i] > inv[i+1]
//   A sigma_i      swaps the values i, i+1 in images
//   sigma_i^-1 A   swaps the entries i, i+1 of images

namespace {

Permutation delta_permutation(int degree) {
  std::vector<int> images(degree);
  for (int k = 0; k < degree; ++k) images[k] = degree - 1 - k;
  return Permutation(std::move(images));
}

using Images = std::vector<int>;

// Moves letters from the front of `right` onto `left` until the pair is
// left-weighted.  Returns true when anything moved.
bool left_weight(Images& left, Images& right) {
  const int m = static_cast<int>(left.size());
  thread_local Images inv;
  inv.resize(left.size());
  for (int k = 0; k < m; ++k) inv[left[k]] = k;

  // sigma_i starts B but does not end A.
  auto next_move = [&]() {
    for (int i = 0; i + 1 < m; ++i)
      if (right[i] > right[i + 1] && inv[i] < inv[i + 1]) return i;
    return -1;
  };
  int move = next_move();
  if (move < 0) return false;
  while (move >= 0) {
    // A sigma_i swaps the values i, i+1; sigma_i^-1 B swaps entries i, i+1.
    left[inv[move]] = move + 1;
    left[inv[move + 1]] = move;
    std::swap(inv[move], inv[move + 1]);
    std::swap(right[move], right[move + 1]);
    move = next_move();
  }
  return true;
}

bool is_identity_images(const Images& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) return false;
  return true;
}

bool is_delta_images(const Images& p) {
  const int m = static_cast<int>(p.size());
  for (int k = 0; k < m; ++k)
    if (p[k] != m - 1 - k) return false;
  return true;
}

}  // namespace

NormalForm normal_form(const BraidWord& b) {
  NormalForm nf;
  nf.degree = b.degree();
  const int m = b.degree();
  if (m < 2) return nf;

  // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1).  Every Delta^-1 is pulled to the
  // front, flipping each simple factor it passes.
  std::size_t negatives_after = 0;
  for (const Letter& l : b.letters()) negatives_after += l.sign < 0 ? 1 : 0;
  nf.infimum = -static_cast<long long>(negatives_after);

  std::vector<Images> factors;
  std::size_t used = 0;
  for (const Letter& l : b.letters()) {
    if (l.sign < 0) --negatives_after;
    int i = l.index - 1;
    if (negatives_after % 2 == 1) i = m - 2 - i;
    if (used == factors.size()) factors.emplace_back(static_cast<std::size_t>(m));
    Images& x = factors[used++];
    if (l.sign > 0) {
      for (int k = 0; k < m; ++k) x[k] = k;
      std::swap(x[i], x[i + 1]);
    } else {
      // Delta sigma_i^-1: the values i, i+1 of Delta swapped.
      for (int k = 0; k < m; ++k) x[k] = m - 1 - k;
      std::swap(x[m - 1 - i], x[m - 2 - i]);
    }

    for (std::size_t j = used - 1; j > 0; --j) {
      if (!left_weight(factors[j - 1], factors[j])) break;
    }
    while (used > 0 && is_identity_images(factors[used - 1])) --used;
  }

  std::size_t leading = 0;
  while (leading < used && is_delta_images(factors[leading])) ++leading;
  nf.infimum += static_cast<long long>(leading);
  nf.factors.reserve(used - leading);
  for (std::size_t k = leading; k < used; ++k) nf.factors.emplace_back(std::move(factors[k]));
  return nf;
}

bool is_identity(const BraidWord& b) {
  const NormalForm nf = normal_form(b);
  return nf.infimum == 0 && nf.factors.empty();
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  require_same_degree(a, b);
  return normal_form(a) == normal_form(b);
}

std::size_t NormalForm::canonical_length() const {
  return factors.size() + static_cast<std::size_t>(infimum < 0 ? -infimum : infimum);
}

BraidWord permutation_braid_word(const Permutation& p) {
  std::vector<int> images = p.images();
  std::vector<Letter> letters;
  const int m = static_cast<int>(images.size());
  for (int i = 0; i + 1 < m;) {
    if (images[i] > images[i + 1]) {
      letters.push_back({i + 1, 1});
      std::swap(images[i], images[i + 1]);
      i = 0;
    } else {
      ++i;
    }
  }
  return BraidWord(std::max(m, 1), std::move(letters));
}

BraidWord NormalForm::to_word() const {
  BraidWord out(degree);
  if (degree < 2) return out;
  const BraidWord delta = permutation_braid_word(delta_permutation(degree));
  out = power(delta, infimum);
  for (const Permutation& f : factors) out = product(out, permutation_braid_word(f));
  return out;
}

std::size_t hash_value(const NormalForm& nf) {
  std::size_t h = std::hash<long long>{}(nf.infimum) ^ (static_cast<std::size_t>(nf.degree) << 1);
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const Permutation& f : nf.factors)
    for (int v : f.images()) mix(static_cast<std::size_t>(v));
  mix(nf.factors.size());
  return h;
}

}  // namespace hurwitz
