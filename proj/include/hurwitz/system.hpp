#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hurwitz/braid.hpp"

namespace hurwitz {

/// An ordered tuple (b_1, ..., b_n) of braids in a common B_m, n >= 1.
class BraidSystem {
 public:
  BraidSystem(int degree, std::vector<BraidWord> components);

  static BraidSystem parse(int degree, const std::vector<std::string>& words);

  int degree() const { return degree_; }
  std::size_t length() const { return components_.size(); }
  const std::vector<BraidWord>& components() const { return components_; }
  const BraidWord& operator[](std::size_t i) const { return components_[i]; }

  /// b_1 b_2 ... b_n
  BraidWord trace() const;
  std::vector<NormalForm> normal_forms() const;
  std::vector<std::string> words() const;

  friend bool operator==(const BraidSystem&, const BraidSystem&) = default;

 private:
  int degree_;
  std::vector<BraidWord> components_;
};

/// Componentwise braids_equal.
bool systems_equal(const BraidSystem& a, const BraidSystem& b);

}  // namespace hurwitz
