#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/matrix.hpp"

namespace hurwitz {

/// Univariate polynomial over the integers, coefficients lowest degree first.
/// Trailing zero coefficients are never stored; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(std::size_t degree, const Integer& c = 1);
  /// x - root
  static IntPolynomial linear(const Integer& root);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  /// Coefficient of x^k; zero beyond the degree.
  Integer coefficient(std::size_t k) const;
  Integer evaluate(const Integer& x) const;

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial pow(unsigned k) const;

  /// Quotient by (x - root) when it divides exactly.
  bool divide_by_root(const Integer& root, IntPolynomial& quotient) const;

  /// Dense descending form, e.g. "x^5 - 21x^3 - 16x^2 + 108x + 144".
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  /// Degree first, then the ascending coefficient arrays lexicographically.
  friend std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
bool poly_equal(const IntPolynomial& p, const IntPolynomial& q);

struct RootMultiplicity {
  Integer root;
  int multiplicity = 0;

  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// Integer roots with multiplicity, largest root first.
std::vector<RootMultiplicity> integer_roots(const IntPolynomial& p);

/// p == x^zero_mult (x-1)^one_mult (x+1)^neg_one_mult * core, with core
/// vanishing at none of 0, 1, -1.
struct ReducedPolynomial {
  int zero_mult = 0;
  int one_mult = 0;
  int neg_one_mult = 0;
  IntPolynomial core;

  IntPolynomial expand() const;
  friend bool operator==(const ReducedPolynomial&, const ReducedPolynomial&) = default;
};

ReducedPolynomial reduce_poly(const IntPolynomial& p);

/// Extracts x, (x+1), (x-1) and other integer-root factors; whatever does not
/// split prints densely, e.g. "x^6 (x+1)^3 (x-1)^6 (x+3)".
std::string factored_string(const IntPolynomial& p);

}  // namespace hurwitz
