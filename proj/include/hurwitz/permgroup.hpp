#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hurwitz/braid.hpp"

namespace hurwitz {

/// Subgroup of S_n given by generators, stored as a base and strong
/// generating set (deterministic Schreier-Sims).
class PermutationGroup {
 public:
  PermutationGroup(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const { return degree_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;
  const std::vector<int>& base() const { return base_; }

 private:
  struct Level {
    std::vector<Permutation> generators;
    // transversal[x] maps the base point to x; empty outside the orbit.
    std::vector<std::optional<Permutation>> transversal;
    std::vector<int> orbit;
  };

  void rebuild_level(std::size_t level);
  /// Returns the residue and the level at which sifting stopped
  /// (levels_.size() if it passed every level).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;
  void add_base_point_for(const Permutation& p);

  std::size_t degree_;
  std::vector<int> base_;
  std::vector<Permutation> strong_generators_;
  std::vector<Level> levels_;
};

}  // namespace hurwitz
