#include "hurwitz/system_moves.hpp"

#include "hurwitz/invariants.hpp"

namespace hurwitz {

BraidSystem hurwitz_move(const BraidSystem& s, const HurwitzMove& move) {
  const int n = static_cast<int>(s.length());
  if (move.index < 1 || move.index > n - 1)
    throw MoveError("Hurwitz move index " + std::to_string(move.index) +
                    " is out of range for a system of length " + std::to_string(n));
  std::vector<BraidWord> c = s.components();
  const std::size_t i = static_cast<std::size_t>(move.index - 1);
  const BraidWord left = c[i];
  const BraidWord right = c[i + 1];
  if (move.direction == HurwitzMove::Direction::kForward) {
    c[i] = right;
    c[i + 1] = free_reduce(conjugate(left, right));
  } else {
    c[i] = free_reduce(conjugate(right, inverse(left)));
    c[i + 1] = left;
  }
  return BraidSystem(s.degree(), std::move(c));
}

namespace {

void check_index(std::size_t n, const HurwitzMove& move) {
  if (move.index < 1 || static_cast<std::size_t>(move.index) > n - 1 || n < 2)
    throw MoveError("Hurwitz move index " + std::to_string(move.index) +
                    " is out of range for a system of length " + std::to_string(n));
}

}  // namespace

std::vector<Permutation> hurwitz_move(const std::vector<Permutation>& shadow, const HurwitzMove& move) {
  check_index(shadow.size(), move);
  std::vector<Permutation> out = shadow;
  const std::size_t i = static_cast<std::size_t>(move.index - 1);
  const Permutation& left = shadow[i];
  const Permutation& right = shadow[i + 1];
  if (move.direction == HurwitzMove::Direction::kForward) {
    out[i] = right;
    out[i + 1] = right.inverse().then(left).then(right);
  } else {
    out[i] = left.then(right).then(left.inverse());
    out[i + 1] = left;
  }
  return out;
}

std::vector<int> hurwitz_move(const std::vector<int>& shadow, const HurwitzMove& move) {
  check_index(shadow.size(), move);
  std::vector<int> out = shadow;
  const std::size_t i = static_cast<std::size_t>(move.index - 1);
  std::swap(out[i], out[i + 1]);
  return out;
}

BraidSystem hurwitz_act(const BraidSystem& s, const BraidWord& beta) {
  if (static_cast<std::size_t>(beta.degree()) != s.length())
    throw DegreeMismatch("acting braid lies in B_" + std::to_string(beta.degree()) +
                         " but the system has length " + std::to_string(s.length()));
  BraidSystem out = s;
  for (const Letter& l : beta.letters()) {
    out = hurwitz_move(out, {l.index, l.sign > 0 ? HurwitzMove::Direction::kForward
                                                 : HurwitzMove::Direction::kInverse});
  }
  return out;
}

BraidSystem global_conjugate(const BraidSystem& s, const BraidWord& a) {
  if (a.degree() != s.degree())
    throw DegreeMismatch("conjugator lies in B_" + std::to_string(a.degree()) +
                         " but the system has degree " + std::to_string(s.degree()));
  std::vector<BraidWord> c;
  c.reserve(s.length());
  for (const auto& b : s.components()) c.push_back(free_reduce(conjugate(b, a)));
  return BraidSystem(s.degree(), std::move(c));
}

BraidSystem stabilize(const BraidSystem& s) {
  const int m = s.degree();
  std::vector<BraidWord> c;
  c.reserve(s.length() + 2);
  for (const auto& b : s.components()) c.push_back(iota(b));
  c.push_back(BraidWord::generator(m + 1, m, 1));
  c.push_back(BraidWord::generator(m + 1, m, -1));
  return BraidSystem(m + 1, std::move(c));
}

BraidSystem destabilize(const BraidSystem& s) {
  const int top = s.degree();  // m + 1
  const std::size_t n = s.length();
  if (top < 2) throw MoveError("destabilization needs degree at least 2");
  if (n < 3) throw MoveError("destabilization needs at least three components");
  const int m = top - 1;
  if (!braids_equal(s[n - 2], BraidWord::generator(top, m, 1)))
    throw MoveError("component " + std::to_string(n - 1) + " is not sigma_" + std::to_string(m));
  if (!braids_equal(s[n - 1], BraidWord::generator(top, m, -1)))
    throw MoveError("component " + std::to_string(n) + " is not sigma_" + std::to_string(m) + "^-1");

  std::vector<BraidWord> c;
  c.reserve(n - 2);
  for (std::size_t i = 0; i + 2 < n; ++i) {
    const BraidWord reduced = free_reduce(s[i]);
    if (reduced.max_index() >= m)
      throw MoveError("component " + std::to_string(i + 1) + " uses sigma_" + std::to_string(m) +
                      " and is not visibly in the image of B_" + std::to_string(m) +
                      "; rewrite it without that generator");
    c.emplace_back(m, reduced.letters());
  }
  return BraidSystem(m, std::move(c));
}

int tau(const BraidWord& b) {
  return b.degree() - static_cast<int>(permutation(b).cycle_count());
}

FusionResult euler_fuse(const BraidSystem& s, int l, int q) {
  const int n = static_cast<int>(s.length());
  if (q < 1 || l < 1 || l + q > n)
    throw MoveError("fusion range l=" + std::to_string(l) + ", q=" + std::to_string(q) +
                    " does not fit a system of length " + std::to_string(n));
  std::vector<BraidWord> pieces(s.components().begin() + (l - 1), s.components().begin() + (l + q));
  BraidWord fused = free_reduce(product(pieces, s.degree()));
  int tau_sum = 0;
  for (const auto& p : pieces) tau_sum += tau(p);
  const bool check = tau(fused) == tau_sum;

  std::vector<BraidWord> c(s.components().begin(), s.components().begin() + (l - 1));
  c.push_back(std::move(fused));
  c.insert(c.end(), s.components().begin() + (l + q), s.components().end());
  return {BraidSystem(s.degree(), std::move(c)), check};
}

bool euler_fission_check(const BraidWord& whole, const std::vector<BraidWord>& pieces) {
  for (const auto& p : pieces)
    if (p.degree() != whole.degree())
      throw DegreeMismatch("fission pieces must share the degree of the split component");
  if (pieces.size() < 2) return false;
  int tau_sum = 0;
  for (const auto& p : pieces) {
    if (is_identity(p)) return false;
    tau_sum += tau(p);
  }
  if (tau(whole) != tau_sum) return false;
  return braids_equal(whole, product(pieces, whole.degree()));
}

EulerVerdict euler_necessity(const BraidSystem& s1, const BraidSystem& s2) {
  const auto mod3 = [](const BraidSystem& s) {
    return (static_cast<std::size_t>(s.degree()) + s.length()) % 3;
  };
  if (mod3(s1) != mod3(s2)) return EulerVerdict::kNecessary;
  const auto core = [](const BraidSystem& s) {
    IntPolynomial p = IntPolynomial::constant(1);
    for (const auto& c : s.components()) p = p * braid_charpoly(c);
    return reduce_poly(p).core;
  };
  return core(s1) == core(s2) ? EulerVerdict::kUnknown : EulerVerdict::kNecessary;
}

std::string to_string(EulerVerdict v) { return v == EulerVerdict::kNecessary ? "necessary" : "unknown"; }

}  // namespace hurwitz
