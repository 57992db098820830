#pragma once

// Random generators and slow reference implementations shared by the tests.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>

#include "hurwitz/braid.hpp"
#include "hurwitz/matrix.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/system.hpp"

namespace testing {

using namespace hurwitz;

inline BraidWord random_word(std::mt19937_64& rng, int degree, std::size_t max_length,
                             bool positive = false) {
  if (degree < 2) return BraidWord(degree);
  std::uniform_int_distribution<std::size_t> len(0, max_length);
  std::uniform_int_distribution<int> gen(1, degree - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<Letter> letters;
  for (std::size_t k = len(rng); k > 0; --k) letters.push_back({gen(rng), positive || coin(rng) ? 1 : -1});
  return BraidWord(degree, std::move(letters));
}

inline BraidSystem random_system(std::mt19937_64& rng, int min_degree, int max_degree, std::size_t min_length,
                                 std::size_t max_length, std::size_t max_word = 6) {
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  std::uniform_int_distribution<std::size_t> len(min_length, max_length);
  const int m = deg(rng);
  std::vector<BraidWord> c;
  for (std::size_t k = len(rng); k > 0; --k) c.push_back(random_word(rng, m, max_word));
  return BraidSystem(m, std::move(c));
}

// Rewrites a word by a random braid relation without changing the braid it represents.
inline BraidWord random_relation_rewrite(std::mt19937_64& rng, const BraidWord& b) {
  const int m = b.degree();
  if (m < 2) return b;
  auto letters = b.letters();
  std::uniform_int_distribution<std::size_t> pos(0, letters.size());
  std::uniform_int_distribution<int> gen(1, m - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: {
      const int i = gen(rng), s = coin(rng) ? 1 : -1;
      const auto at = letters.begin() + static_cast<long>(pos(rng));
      letters.insert(letters.insert(at, {i, -s}), {i, s});
      break;
    }
    case 1:
      for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
        const Letter a = letters[k], c = letters[k + 1];
        if (std::abs(a.index - c.index) >= 2) {
          std::swap(letters[k], letters[k + 1]);
          break;
        }
      }
      break;
    default:
      for (std::size_t k = 0; k + 2 < letters.size(); ++k) {
        const Letter a = letters[k], c = letters[k + 1], d = letters[k + 2];
        if (a == d && a.sign == c.sign && std::abs(a.index - c.index) == 1) {
          letters[k] = c;
          letters[k + 1] = a;
          letters[k + 2] = c;
          break;
        }
      }
      break;
  }
  return BraidWord(m, std::move(letters));
}

// Polynomial-entry cofactor expansion of det(xI - M).
inline IntPolynomial cofactor_charpoly(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<IntPolynomial>> a(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = (i == j ? IntPolynomial::monomial(1) : IntPolynomial()) - IntPolynomial::constant(m(i, j));

  std::function<IntPolynomial(const std::vector<std::size_t>&, std::size_t)> expand =
      [&](const std::vector<std::size_t>& cols, std::size_t row) -> IntPolynomial {
    if (cols.empty()) return IntPolynomial::constant(1);
    IntPolynomial total;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      IntPolynomial term = a[row][cols[k]] * expand(rest, row + 1);
      total = k % 2 == 0 ? total + term : total - term;
    }
    return total;
  };
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  return expand(cols, 0);
}

// Rank over the rationals by plain Gaussian elimination.
inline std::size_t rational_rank(const IntMatrix& m) {
  using Q = boost::multiprecision::cpp_rational;
  const std::size_t n = m.size();
  std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Q(m(i, j));
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < n; ++col) {
    std::size_t p = r;
    while (p < n && a[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Q f = a[i][col] / a[r][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

// Group order by closing the generator set under composition.
inline std::size_t closure_order(std::size_t degree, const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation(degree)};
  std::deque<Permutation> queue{Permutation(degree)};
  while (!queue.empty()) {
    const Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q = p.then(g);
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return seen.size();
}

inline IntMatrix permuted(const IntMatrix& m, const Permutation& p) {
  IntMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = m(static_cast<std::size_t>(p[i]), static_cast<std::size_t>(p[j]));
  return out;
}

// Tries every permutation.
inline bool brute_force_equivalent(const IntMatrix& m, const IntMatrix& n) {
  if (m.size() != n.size()) return false;
  std::vector<int> images(m.size());
  std::iota(images.begin(), images.end(), 0);
  do {
    if (permuted(m, Permutation(images)) == n) return true;
  } while (std::next_permutation(images.begin(), images.end()));
  return false;
}

inline IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> entry(lo, hi);
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
  return m;
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(images);
}

}  // namespace testing
