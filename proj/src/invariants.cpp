#include "hurwitz/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hurwitz/linalg.hpp"

namespace hurwitz {

namespace {

std::vector<std::vector<Integer>> sorted_lines(const IntMatrix& m, bool rows) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto line = rows ? m.row(i) : m.column(i);
    std::sort(line.begin(), line.end());
    out.push_back(std::move(line));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BraidInvariantReport braid_invariants(const BraidWord& b) {
  BraidInvariantReport r;
  r.degree = b.degree();
  r.normal_form = normal_form(b);
  auto pure = pure_power_matrix(b);
  r.order = pure.order;
  r.pure_power_matrix = std::move(pure.matrix);
  const IntMatrix& c = r.pure_power_matrix;

  r.charpoly = charpoly(c);
  r.determinant = determinant(c);
  r.rank = rank(c);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) r.entries.push_back(c(i, j));
  std::sort(r.entries.begin(), r.entries.end());
  r.row_multisets = sorted_lines(c, true);
  r.column_multisets = sorted_lines(c, false);
  r.integer_eigenvalues = integer_roots(r.charpoly);
  return r;
}

bool same_invariants(const BraidInvariantReport& a, const BraidInvariantReport& b) {
  return a.degree == b.degree && a.order == b.order && a.charpoly == b.charpoly &&
         a.determinant == b.determinant && a.rank == b.rank && a.entries == b.entries &&
         a.row_multisets == b.row_multisets && a.column_multisets == b.column_multisets &&
         a.integer_eigenvalues == b.integer_eigenvalues;
}

IntPolynomial braid_charpoly(const BraidWord& b) { return charpoly(pure_power_matrix(b).matrix); }

PermutationGroup permutation_monodromy(const BraidSystem& s) {
  std::vector<Permutation> gens;
  gens.reserve(s.length());
  for (const auto& c : s.components()) gens.push_back(permutation(c));
  return PermutationGroup(static_cast<std::size_t>(s.degree()), gens);
}

SystemInvariantReport system_invariants(const BraidSystem& s) {
  SystemInvariantReport r;
  r.degree = s.degree();
  r.length = s.length();
  r.component_normal_forms = s.normal_forms();
  r.charpoly_product = IntPolynomial::constant(1);
  for (const auto& c : s.components()) {
    IntPolynomial p = braid_charpoly(c);
    r.charpoly_product = r.charpoly_product * p;
    r.charpoly_multiset.push_back(std::move(p));
    r.exponent_sums.push_back(exponent_sum(c));
  }
  std::sort(r.charpoly_multiset.begin(), r.charpoly_multiset.end());
  std::sort(r.exponent_sums.begin(), r.exponent_sums.end());
  r.essential = reduce_poly(r.charpoly_product);
  r.trace_normal_form = normal_form(s.trace());
  r.trace_is_identity = r.trace_normal_form.infimum == 0 && r.trace_normal_form.factors.empty();
  r.perm_monodromy_order = permutation_monodromy(s).order();
  r.degree_plus_length_mod3 = static_cast<int>((static_cast<std::size_t>(s.degree()) + s.length()) % 3);
  return r;
}

std::vector<Integer> essential_integer_eigenvalues(const ReducedPolynomial& essential) {
  std::vector<Integer> out;
  for (const auto& rm : integer_roots(essential.core))
    for (int k = 0; k < rm.multiplicity; ++k) out.push_back(rm.root);
  std::sort(out.begin(), out.end());
  return out;
}

BraidWord family_weaving(int m) {
  if (m < 3 || m % 2 == 0)
    throw std::invalid_argument("weaving braid W(m,1) needs odd m >= 3, got " + std::to_string(m));
  std::vector<Letter> letters;
  for (int i = 1; i <= m - 1; ++i) letters.push_back({i, i % 2 == 1 ? 1 : -1});
  return BraidWord(m, std::move(letters));
}

BraidWord family_bm(int m) {
  if (m <= 2) throw std::invalid_argument("b_m needs m > 2, got " + std::to_string(m));
  std::vector<Letter> letters;
  for (int i = 1; i <= m - 2; ++i) letters.push_back({i, 1});
  letters.push_back({m - 1, 1});
  letters.push_back({m - 1, 1});
  for (int i = m - 2; i >= 1; --i) letters.push_back({i, 1});
  return BraidWord(m, std::move(letters));
}

BraidWord family_bmk(int m, int k) {
  if (k < 0) throw std::invalid_argument("b_{m,k} needs k >= 0");
  return product(family_bm(m), power(BraidWord::generator(m, 1), 2LL * k));
}

IntPolynomial pure3_charpoly_oracle(const BraidWord& b) {
  if (b.degree() != 3) throw std::invalid_argument("pure 3-braid oracle needs a braid in B_3");
  for (const Letter& l : b.letters())
    if (l.sign < 0) throw std::invalid_argument("pure 3-braid oracle needs a positive word");

  // crossings[i][j] counts letters where strands i and j meet.
  long long crossings[3][3] = {};
  int strand_at[3] = {0, 1, 2};
  for (const Letter& l : b.letters()) {
    const int u = strand_at[l.index - 1];
    const int v = strand_at[l.index];
    ++crossings[u][v];
    ++crossings[v][u];
    std::swap(strand_at[l.index - 1], strand_at[l.index]);
  }
  if (strand_at[0] != 0 || strand_at[1] != 1 || strand_at[2] != 2)
    throw std::invalid_argument("pure 3-braid oracle needs a pure braid");

  const Integer k = crossings[0][1] / 2;
  const Integer l = crossings[0][2] / 2;
  const Integer n = crossings[1][2] / 2;
  return IntPolynomial(std::vector<Integer>{-2 * k * l * n, -(k * k + l * l + n * n), 0, 1});
}

}  // namespace hurwitz
