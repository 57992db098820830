#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/system.hpp"
#include "hurwitz/system_moves.hpp"

namespace hurwitz {

struct OrbitLimits {
  std::size_t max_states = 100000;
  std::size_t max_depth = 32;
  /// Bound on NormalForm::canonical_length() of every component.
  std::size_t max_component_canonical_length = 64;
};

enum class OrbitStatus { kComplete, kTruncated, kTargetFound };
std::string to_string(OrbitStatus s);

struct OrbitResult {
  OrbitStatus status = OrbitStatus::kComplete;
  std::size_t states_visited = 0;
  /// Moves from the source to the target, when one was found.
  std::optional<std::vector<HurwitzMove>> witness;
  /// Depth of the deepest state when the orbit closed.
  std::optional<std::size_t> frontier_exhausted_at_depth;
};

/// Called once per distinct state, in discovery order.
using OrbitVisitor = std::function<void(const BraidSystem& state, std::size_t depth)>;

/// One canonical key per state: the tuple of component normal forms.
std::vector<NormalForm> system_key(const BraidSystem& s);

/// Rewrites every component as its expanded normal form, free-reduced.
BraidSystem canonical_system(const BraidSystem& s);

/// Breadth-first search of the Hurwitz orbit of `source` under
/// sigma_1^{+-1}, ..., sigma_{n-1}^{+-1}.  kComplete means the explored set is
/// closed under every move and no state was pruned.
OrbitResult hurwitz_orbit(const BraidSystem& source, const OrbitLimits& limits,
                          const std::optional<BraidSystem>& target = std::nullopt,
                          const OrbitVisitor& visitor = {});

/// Replays a witness from `source`.
BraidSystem replay(const BraidSystem& source, const std::vector<HurwitzMove>& moves);

/// Shortest conjugator a (by canonical search over words of length at most
/// max_length) with a^-1 b a == target.
std::optional<BraidWord> find_conjugator(const BraidWord& b, const BraidWord& target,
                                         std::size_t max_length, std::size_t max_states = 200000);

struct InvarianceReport {
  std::size_t trials = 0;
  std::size_t moves_applied = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Random sequences of Hurwitz moves, global conjugations and
/// stabilize/destabilize round trips, checking after every step that the
/// characteristic polynomial data, the essential core, the exponent-sum
/// multiset and the (tracked) trace behave as they must.
InvarianceReport verify_invariance(const BraidSystem& s, std::size_t trials, std::uint64_t seed,
                                   std::size_t max_sequence_length = 15);

}  // namespace hurwitz
