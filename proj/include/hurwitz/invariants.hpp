#pragma once

#include <cstdint>
#include <vector>

#include "hurwitz/braid.hpp"
#include "hurwitz/crossing.hpp"
#include "hurwitz/permgroup.hpp"
#include "hurwitz/polynomial.hpp"
#include "hurwitz/system.hpp"

namespace hurwitz {

/// Conjugacy invariants of a braid b, all read off C(b^r) where r is the
/// order of the braid permutation.
struct BraidInvariantReport {
  int degree = 1;
  std::uint64_t order = 1;
  NormalForm normal_form;
  CrossingMatrix pure_power_matrix;
  IntPolynomial charpoly;
  Integer determinant;
  std::size_t rank = 0;
  /// All entries, sorted.
  std::vector<Integer> entries;
  /// Row (column) multisets, each sorted, then sorted as a list.
  std::vector<std::vector<Integer>> row_multisets;
  std::vector<std::vector<Integer>> column_multisets;
  std::vector<RootMultiplicity> integer_eigenvalues;

  friend bool operator==(const BraidInvariantReport&, const BraidInvariantReport&) = default;
};

/// True when every conjugacy-invariant field agrees (normal form and the
/// unpermuted matrix are excluded).
bool same_invariants(const BraidInvariantReport& a, const BraidInvariantReport& b);

BraidInvariantReport braid_invariants(const BraidWord& b);

/// P(b) on its own.
IntPolynomial braid_charpoly(const BraidWord& b);

struct SystemInvariantReport {
  int degree = 1;
  std::size_t length = 0;
  std::vector<NormalForm> component_normal_forms;
  IntPolynomial charpoly_product;
  /// Sorted by degree, then coefficients.
  std::vector<IntPolynomial> charpoly_multiset;
  ReducedPolynomial essential;
  bool trace_is_identity = false;
  NormalForm trace_normal_form;
  std::uint64_t perm_monodromy_order = 1;
  /// Sorted.
  std::vector<int> exponent_sums;
  int degree_plus_length_mod3 = 0;

  friend bool operator==(const SystemInvariantReport&, const SystemInvariantReport&) = default;
};

SystemInvariantReport system_invariants(const BraidSystem& s);

/// Image of the monodromy group <b_1, ..., b_n> in S_m.
PermutationGroup permutation_monodromy(const BraidSystem& s);

/// Integer roots of the essential core with multiplicity, ascending; the
/// part of E that is not integral is reported by `essential.core` alone.
std::vector<Integer> essential_integer_eigenvalues(const ReducedPolynomial& essential);

// Braid families with closed-form characteristic polynomials.

/// sigma_1 sigma_2^-1 sigma_3 ... sigma_{m-1}^-1 for odd m >= 3.
BraidWord family_weaving(int m);
/// sigma_1 ... sigma_{m-2} sigma_{m-1}^2 sigma_{m-2} ... sigma_1, m > 2.
BraidWord family_bm(int m);
/// family_bm(m) sigma_1^{2k}
BraidWord family_bmk(int m, int k);

/// x^3 - (k^2 + l^2 + n^2) x - 2kln for a positive pure 3-braid whose strand
/// pairs cross 2k, 2l, 2n times.  Counts crossings directly from the word.
IntPolynomial pure3_charpoly_oracle(const BraidWord& b);

}  // namespace hurwitz
