#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/system.hpp"

namespace hurwitz {

/// Raised when a move does not apply to the current system.
class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// sigma_index (forward) or sigma_index^-1 (inverse) acting on the right.
struct HurwitzMove {
  enum class Direction { kForward, kInverse };

  int index = 1;  // 1-based, 1 <= index <= n-1
  Direction direction = Direction::kForward;

  friend bool operator==(const HurwitzMove&, const HurwitzMove&) = default;
};

/// forward:  (.., b_i, b_{i+1}, ..) -> (.., b_{i+1}, b_{i+1}^-1 b_i b_{i+1}, ..)
/// inverse:  (.., b_i, b_{i+1}, ..) -> (.., b_i b_{i+1} b_i^-1, b_i, ..)
/// New components are free-reduced.
BraidSystem hurwitz_move(const BraidSystem& s, const HurwitzMove& move);

/// The same move on the permutation shadow (pi(b_1), ..., pi(b_n)).
std::vector<Permutation> hurwitz_move(const std::vector<Permutation>& shadow, const HurwitzMove& move);
/// The same move on the exponent-sum shadow; conjugation is trivial in Z.
std::vector<int> hurwitz_move(const std::vector<int>& shadow, const HurwitzMove& move);

/// Applies the letters of beta in B_n left to right.
BraidSystem hurwitz_act(const BraidSystem& s, const BraidWord& beta);

BraidSystem global_conjugate(const BraidSystem& s, const BraidWord& a);

/// (iota(b_1), ..., iota(b_n), sigma_m, sigma_m^-1) in (B_{m+1})^{n+2}.
BraidSystem stabilize(const BraidSystem& s);
/// Inverse of stabilize.  Throws MoveError naming the blocking component.
BraidSystem destabilize(const BraidSystem& s);

/// m minus the number of components of the closure of b.
int tau(const BraidWord& b);

struct FusionResult {
  BraidSystem system;
  /// tau(product) == sum of tau(pieces).
  bool tau_check = false;
};

/// Replaces components l..l+q (1-based, q >= 1) by their product.
FusionResult euler_fuse(const BraidSystem& s, int l, int q);

/// whole == product(pieces) as braids, tau is additive over the split, and
/// no piece is trivial.  Needs at least two pieces.
bool euler_fission_check(const BraidWord& whole, const std::vector<BraidWord>& pieces);

enum class EulerVerdict { kNecessary, kUnknown };

/// kNecessary when the essential cores of P differ or (m + n) mod 3 differs.
EulerVerdict euler_necessity(const BraidSystem& s1, const BraidSystem& s2);

std::string to_string(EulerVerdict v);

}  // namespace hurwitz
