#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz {

/// Raised for malformed word text; the message names the offending token.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when two operands live in braid groups of different degree.
class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One letter sigma_index^sign of a braid word.  `index` is 1-based.
struct Letter {
  int index = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A permutation of {0..n-1}.  images()[k] is where k is sent.
///
/// For braids, images()[k] is the lower-endpoint position of the strand that
/// starts at upper position k, and products compose top to bottom:
/// permutation(a * b) == permutation(a).then(permutation(b)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<int> images);

  static Permutation transposition(std::size_t degree, int i, int j);

  std::size_t degree() const { return images_.size(); }
  const std::vector<int>& images() const { return images_; }
  int operator[](std::size_t k) const { return images_[k]; }

  /// Apply *this, then `next`.
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  std::vector<std::vector<int>> cycles() const;
  std::size_t cycle_count() const;
  std::uint64_t order() const;

  /// 1-based images, the form used in text and JSON.
  std::vector<int> one_based() const;
  static Permutation from_one_based(const std::vector<int>& images);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// A word in the Artin generators of B_m.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int degree);
  BraidWord(int degree, std::vector<Letter> letters);

  /// Signed-token form: k > 0 is sigma_k, k < 0 is sigma_{-k}^{-1}.
  static BraidWord from_tokens(int degree, const std::vector<int>& tokens);
  static BraidWord generator(int degree, int index, int sign = 1);

  int degree() const { return degree_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::vector<int> tokens() const;
  /// "1,1,-2"; the empty word prints as "".
  std::string to_string() const;

  /// Highest generator index used, 0 for the empty word.
  int max_index() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int degree_ = 1;
  std::vector<Letter> letters_;
};

BraidWord parse_word(std::string_view text, int degree);

Permutation permutation(const BraidWord& b);
std::uint64_t permutation_order(const BraidWord& b);
int exponent_sum(const BraidWord& b);

BraidWord product(const BraidWord& a, const BraidWord& b);
BraidWord product(const std::vector<BraidWord>& factors, int degree);
BraidWord inverse(const BraidWord& b);
BraidWord power(const BraidWord& b, long long k);
/// The literal word a^-1 b a.
BraidWord conjugate(const BraidWord& b, const BraidWord& a);
/// Cancels adjacent s s^-1 pairs.  Does not change the braid.
BraidWord free_reduce(const BraidWord& b);
/// Same letters in B_{m+1}.
BraidWord iota(const BraidWord& b);

/// Left normal form Delta^infimum * A_1 ... A_k with each A_i a proper,
/// non-trivial permutation braid and every adjacent pair left-weighted.
struct NormalForm {
  int degree = 1;
  long long infimum = 0;
  std::vector<Permutation> factors;

  /// Number of factors plus |infimum|.
  std::size_t canonical_length() const;
  /// Expands back to a word: Delta^infimum followed by each factor.
  BraidWord to_word() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend auto operator<=>(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const BraidWord& b);
bool is_identity(const BraidWord& b);
bool braids_equal(const BraidWord& a, const BraidWord& b);

std::size_t hash_value(const NormalForm& nf);

struct NormalFormHash {
  std::size_t operator()(const NormalForm& nf) const { return hash_value(nf); }
};

/// Positive word of the permutation braid with the given permutation.
BraidWord permutation_braid_word(const Permutation& p);

}  // namespace hurwitz
