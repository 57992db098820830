#include "hurwitz/linalg.hpp"

#include <utility>

namespace hurwitz {

// Berkowitz: with A_{k+1} = [[A_k, c], [r, a]], the descending coefficient
// vector of det(xI - A_{k+1}) is T * (that of A_k), where T is the lower
// triangular Toeplitz matrix with first column (1, -a, -rc, -rA_kc, ...).
IntPolynomial charpoly(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<Integer> poly{1};  // descending
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Integer> column(k + 2);
    column[0] = 1;
    column[1] = -m(k, k);

    // v = A_k^j c for j = 0, 1, ...
    std::vector<Integer> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = m(i, k);
    for (std::size_t j = 0; j < k; ++j) {
      Integer dot = 0;
      for (std::size_t i = 0; i < k; ++i) dot += m(k, i) * v[i];
      column[j + 2] = -dot;
      if (j + 1 == k) break;
      std::vector<Integer> next(k);
      for (std::size_t row = 0; row < k; ++row) {
        Integer acc = 0;
        for (std::size_t i = 0; i < k; ++i) acc += m(row, i) * v[i];
        next[row] = std::move(acc);
      }
      v = std::move(next);
    }

    std::vector<Integer> next_poly(k + 2);
    for (std::size_t row = 0; row < k + 2; ++row) {
      Integer acc = 0;
      for (std::size_t col = 0; col < poly.size() && col <= row; ++col) acc += column[row - col] * poly[col];
      next_poly[row] = std::move(acc);
    }
    poly = std::move(next_poly);
  }
  return IntPolynomial(std::vector<Integer>(poly.rbegin(), poly.rend()));
}

namespace {

// Bareiss elimination in place.  Returns the rank; `sign` tracks row swaps.
std::size_t bareiss(IntMatrix& a, int& sign) {
  const std::size_t n = a.size();
  sign = 1;
  Integer previous = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < n; ++col) {
    std::size_t swap_with = pivot_row;
    while (swap_with < n && a(swap_with, col) == 0) ++swap_with;
    if (swap_with == n) continue;
    if (swap_with != pivot_row) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(swap_with, j), a(pivot_row, j));
      sign = -sign;
    }
    for (std::size_t i = pivot_row + 1; i < n; ++i) {
      for (std::size_t j = col + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(pivot_row, col) - a(i, col) * a(pivot_row, j)) / previous;
      a(i, col) = 0;
    }
    previous = a(pivot_row, col);
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntMatrix a = m;
  int sign = 1;
  if (bareiss(a, sign) < n) return 0;
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  int sign = 1;
  return bareiss(a, sign);
}

}  // namespace hurwitz
