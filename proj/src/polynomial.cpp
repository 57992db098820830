#include "hurwitz/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hurwitz {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  for (long long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> coeffs(degree + 1);
  coeffs[degree] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::linear(const Integer& root) {
  return IntPolynomial(std::vector<Integer>{-root, 1});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<Integer> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coefficient(k) + other.coefficient(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<Integer> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = coefficient(k) - other.coefficient(k);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::pow(unsigned k) const {
  IntPolynomial out = constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool IntPolynomial::divide_by_root(const Integer& root, IntPolynomial& quotient) const {
  if (coeffs_.empty()) return false;
  // Synthetic division, highest coefficient first.
  const std::size_t n = coeffs_.size();
  std::vector<Integer> q(n - 1);
  Integer carry = coeffs_[n - 1];
  for (std::size_t k = n - 1; k-- > 0;) {
    q[k] = carry;
    carry = coeffs_[k] + carry * root;
  }
  if (carry != 0) return false;
  quotient = IntPolynomial(std::move(q));
  return true;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    if (k == 0 || magnitude != 1) out += magnitude.str();
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (a.coeffs_[k] < b.coeffs_[k]) return std::strong_ordering::less;
    if (a.coeffs_[k] > b.coeffs_[k]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

bool poly_equal(const IntPolynomial& p, const IntPolynomial& q) { return p == q; }

namespace {

int strip_root(IntPolynomial& p, const Integer& root) {
  int mult = 0;
  IntPolynomial q;
  while (p.degree() >= 1 && p.divide_by_root(root, q)) {
    p = std::move(q);
    ++mult;
  }
  return mult;
}

Integer abs_value(const Integer& v) { return v < 0 ? Integer(-v) : v; }

// Every root r of p satisfies |r| <= 1 + max |c_k / c_n|.
Integer cauchy_bound(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  const Integer lead = abs_value(c.back());
  Integer best = 0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    Integer q = abs_value(c[k]) / lead + 1;
    best = std::max(best, q);
  }
  return best + 1;
}

}  // namespace

std::vector<RootMultiplicity> integer_roots(const IntPolynomial& p) {
  std::vector<RootMultiplicity> out;
  if (p.degree() < 1) return out;
  IntPolynomial rest = p;
  if (int zeros = strip_root(rest, 0); zeros > 0) out.push_back({0, zeros});

  auto try_root = [&](const Integer& r) {
    if (r == 0 || rest.degree() < 1) return;
    for (const auto& found : out)
      if (found.root == r) return;
    if (int mult = strip_root(rest, r); mult > 0) out.push_back({r, mult});
  };

  if (rest.degree() >= 1) {
    const Integer c0 = abs_value(rest.coefficient(0));
    const Integer bound = cauchy_bound(rest);
    if (bound * bound <= c0) {
      for (Integer d = 1; d <= bound; ++d) {
        if (c0 % d != 0) continue;
        try_root(d);
        try_root(-d);
      }
    } else {
      for (Integer d = 1; d * d <= c0; ++d) {
        if (c0 % d != 0) continue;
        const Integer e = c0 / d;
        try_root(d);
        try_root(-d);
        try_root(e);
        try_root(-e);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.root > b.root; });
  return out;
}

IntPolynomial ReducedPolynomial::expand() const {
  return IntPolynomial::monomial(static_cast<std::size_t>(zero_mult)) *
         IntPolynomial::linear(1).pow(static_cast<unsigned>(one_mult)) *
         IntPolynomial::linear(-1).pow(static_cast<unsigned>(neg_one_mult)) * core;
}

ReducedPolynomial reduce_poly(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cannot reduce the zero polynomial");
  ReducedPolynomial r;
  IntPolynomial rest = p;
  r.zero_mult = strip_root(rest, 0);
  r.one_mult = strip_root(rest, 1);
  r.neg_one_mult = strip_root(rest, -1);
  r.core = std::move(rest);
  return r;
}

namespace {

std::string linear_factor(const Integer& root) {
  if (root == 0) return "x";
  return root > 0 ? "(x-" + root.str() + ")" : "(x+" + Integer(-root).str() + ")";
}

std::string with_power(const std::string& base, int mult) {
  return mult == 1 ? base : base + "^" + std::to_string(mult);
}

}  // namespace

std::string factored_string(const IntPolynomial& p) {
  if (p.is_zero()) return "0";
  if (p.degree() == 0) return p.to_string();

  std::vector<std::string> parts;
  IntPolynomial rest = p;
  for (const Integer& root : {Integer(0), Integer(-1), Integer(1)}) {
    if (int mult = strip_root(rest, root); mult > 0) parts.push_back(with_power(linear_factor(root), mult));
  }
  for (const auto& rm : integer_roots(rest)) {
    strip_root(rest, rm.root);
    parts.push_back(with_power(linear_factor(rm.root), rm.multiplicity));
  }
  if (rest.degree() >= 1) {
    parts.push_back("(" + rest.to_string() + ")");
  } else if (rest.coefficient(0) != 1) {
    parts.insert(parts.begin(), rest.to_string());
  }

  std::string out;
  for (const auto& s : parts) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace hurwitz
