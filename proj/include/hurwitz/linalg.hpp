#pragma once

#include <cstddef>

#include "hurwitz/matrix.hpp"
#include "hurwitz/polynomial.hpp"

namespace hurwitz {

/// det(xI - M) by Berkowitz's division-free algorithm.
IntPolynomial charpoly(const IntMatrix& m);

/// Fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);
/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

}  // namespace hurwitz
