#include "hurwitz/crossing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace hurwitz {

CrossingMatrix crossing_matrix(const BraidWord& b, OverStrand convention) {
  const int m = b.degree();
  // Counts are bounded by the word length, so 64-bit accumulation is exact.
  std::vector<long long> counts(static_cast<std::size_t>(m) * m, 0);
  std::vector<int> strand_at(m);
  std::iota(strand_at.begin(), strand_at.end(), 0);

  const bool mirrored = convention == OverStrand::kMirrored;
  for (const Letter& l : b.letters()) {
    const int left = strand_at[l.index - 1];
    const int right = strand_at[l.index];
    const bool left_over = (l.sign > 0) != mirrored;
    const int over = left_over ? left : right;
    const int under = left_over ? right : left;
    counts[static_cast<std::size_t>(over) * m + under] += l.sign;
    std::swap(strand_at[l.index - 1], strand_at[l.index]);
  }

  CrossingMatrix c(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c(i, j) = counts[static_cast<std::size_t>(i) * m + j];
  return c;
}

PurePowerMatrix pure_power_matrix(const BraidWord& b, OverStrand convention) {
  PurePowerMatrix out;
  out.order = permutation_order(b);
  out.matrix = crossing_matrix(power(b, static_cast<long long>(out.order)), convention);
  return out;
}

namespace {

// Everything about index i that a simultaneous row/column permutation keeps.
using Signature = std::tuple<Integer, std::vector<Integer>, std::vector<Integer>>;

Signature signature(const IntMatrix& m, std::size_t i) {
  auto r = m.row(i);
  auto c = m.column(i);
  std::sort(r.begin(), r.end());
  std::sort(c.begin(), c.end());
  return {m(i, i), std::move(r), std::move(c)};
}

class EquivalenceSearch {
 public:
  EquivalenceSearch(const IntMatrix& m, const IntMatrix& n) : m_(m), n_(n) {
    const std::size_t size = m.size();
    std::map<Signature, std::vector<std::size_t>> m_classes;
    for (std::size_t i = 0; i < size; ++i) m_classes[signature(m, i)].push_back(i);
    candidates_.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      auto it = m_classes.find(signature(n, i));
      if (it != m_classes.end()) candidates_[i] = it->second;
    }
    order_.resize(size);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
      return candidates_[a].size() < candidates_[b].size();
    });
    assignment_.assign(size, -1);
    used_.assign(size, false);
  }

  std::optional<Permutation> run() {
    for (const auto& c : candidates_)
      if (c.empty()) return std::nullopt;
    if (!extend(0)) return std::nullopt;
    return Permutation(assignment_);
  }

 private:
  bool consistent(std::size_t i, std::size_t image, std::size_t depth) const {
    if (n_(i, i) != m_(image, image)) return false;
    for (std::size_t d = 0; d < depth; ++d) {
      const std::size_t k = order_[d];
      const std::size_t pk = static_cast<std::size_t>(assignment_[k]);
      if (n_(i, k) != m_(image, pk) || n_(k, i) != m_(pk, image)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t i = order_[depth];
    for (std::size_t image : candidates_[i]) {
      if (used_[image] || !consistent(i, image, depth)) continue;
      used_[image] = true;
      assignment_[i] = static_cast<int>(image);
      if (extend(depth + 1)) return true;
      used_[image] = false;
      assignment_[i] = -1;
    }
    return false;
  }

  const IntMatrix& m_;
  const IntMatrix& n_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<int> assignment_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<Permutation> permutation_equivalent(const IntMatrix& m, const IntMatrix& n) {
  if (m.size() != n.size())
    throw std::invalid_argument("permutation equivalence needs matrices of equal size");
  return EquivalenceSearch(m, n).run();
}

}  // namespace hurwitz
