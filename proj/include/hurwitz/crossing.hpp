#pragma once

#include <cstdint>
#include <optional>

#include "hurwitz/braid.hpp"
#include "hurwitz/matrix.hpp"

namespace hurwitz {

/// Entry (i, j) counts signed crossings where strand i passes over strand j.
/// Strands are numbered by their upper endpoint.  The diagonal is zero.
using CrossingMatrix = IntMatrix;

/// Which strand passes over at a letter.
///   kStandard: in sigma_i the strand entering at position i is over, in
///              sigma_i^-1 the one entering at position i+1.
///   kMirrored: the opposite; yields the transpose of kStandard.
enum class OverStrand { kStandard, kMirrored };

CrossingMatrix crossing_matrix(const BraidWord& b, OverStrand convention = OverStrand::kStandard);

struct PurePowerMatrix {
  std::uint64_t order = 1;
  CrossingMatrix matrix;
};

/// (r, C(b^r)) with r the order of the braid permutation.  The matrix is
/// symmetric.
PurePowerMatrix pure_power_matrix(const BraidWord& b,
                                  OverStrand convention = OverStrand::kStandard);

/// Finds p with n(i, j) == m(p(i), p(j)) for all i, j.
std::optional<Permutation> permutation_equivalent(const IntMatrix& m, const IntMatrix& n);

}  // namespace hurwitz
