#pragma once

#include <vector>

#include "cubics/arith.hpp"

namespace cubics {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;

Int dot(const IntVec& a, const IntVec& b);

/// Rank over the rationals, by fraction-free (Bareiss) elimination.
std::size_t rank_of(IntMat m);

/// Determinant of a square matrix, fraction-free.
Int determinant(IntMat m);

/// Adjugate: adj(M) * M = M * adj(M) = det(M) * I.
IntMat adjugate(const IntMat& m);

/// Divide by the gcd of the entries.  The orientation is kept: a ray and its
/// negative are different objects.  The zero vector is returned unchanged.
IntVec primitive(IntVec v);

}  // namespace cubics
