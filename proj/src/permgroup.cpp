#include "hurwitz/permgroup.hpp"

#include <deque>

namespace hurwitz {

PermutationGroup::PermutationGroup(std::size_t degree, const std::vector<Permutation>& generators)
    : degree_(degree) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree does not match group degree");
    if (g.is_identity()) continue;
    strong_generators_.push_back(g);
    bool moves_base = false;
    for (int b : base_) moves_base = moves_base || g[b] != b;
    if (!moves_base) add_base_point_for(g);
  }
  for (std::size_t l = 0; l < base_.size(); ++l) rebuild_level(l);

  std::size_t i = base_.size();
  while (i > 0) {
    const std::size_t level = i - 1;
    bool extended = false;
    const Level snapshot = levels_[level];
    for (int beta : snapshot.orbit) {
      for (const Permutation& s : snapshot.generators) {
        const Permutation& u_beta = *snapshot.transversal[beta];
        const Permutation& u_image = *snapshot.transversal[s[beta]];
        Permutation schreier = u_beta.then(s).then(u_image.inverse());
        if (schreier.is_identity()) continue;
        auto [residue, stopped] = sift(std::move(schreier), level + 1);
        if (residue.is_identity()) continue;
        strong_generators_.push_back(residue);
        if (stopped == base_.size()) add_base_point_for(residue);
        for (std::size_t l = level + 1; l <= stopped && l < base_.size(); ++l) rebuild_level(l);
        i = stopped + 1;
        extended = true;
        break;
      }
      if (extended) break;
    }
    if (!extended) --i;
  }
}

void PermutationGroup::add_base_point_for(const Permutation& p) {
  for (std::size_t x = 0; x < degree_; ++x) {
    if (p[x] != static_cast<int>(x)) {
      base_.push_back(static_cast<int>(x));
      levels_.emplace_back();
      return;
    }
  }
}

void PermutationGroup::rebuild_level(std::size_t level) {
  Level& lv = levels_[level];
  lv.generators.clear();
  for (const Permutation& s : strong_generators_) {
    bool fixes_prefix = true;
    for (std::size_t b = 0; b < level && fixes_prefix; ++b) fixes_prefix = s[base_[b]] == base_[b];
    if (fixes_prefix) lv.generators.push_back(s);
  }
  lv.transversal.assign(degree_, std::nullopt);
  lv.orbit.clear();
  const int root = base_[level];
  lv.transversal[root] = Permutation(degree_);
  lv.orbit.push_back(root);
  std::deque<int> queue{root};
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    for (const Permutation& s : lv.generators) {
      const int y = s[x];
      if (lv.transversal[y]) continue;
      lv.transversal[y] = lv.transversal[x]->then(s);
      lv.orbit.push_back(y);
      queue.push_back(y);
    }
  }
}

std::pair<Permutation, std::size_t> PermutationGroup::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const int image = g[base_[l]];
    const auto& u = levels_[l].transversal[image];
    if (!u) return {std::move(g), l};
    g = g.then(u->inverse());
  }
  return {std::move(g), levels_.size()};
}

std::uint64_t PermutationGroup::order() const {
  std::uint64_t n = 1;
  for (const Level& lv : levels_) n *= lv.orbit.size();
  return n;
}

bool PermutationGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return sift(p, 0).first.is_identity();
}

}  // namespace hurwitz
