#pragma once

#include <optional>
#include <vector>

#include "gvt/numeric.hpp"

namespace gvt {

/// Exact rank via Gaussian elimination with nonzero pivoting.
int rat_rank(RatMat a);

/// Solves a x = b exactly. Inconsistent systems yield nullopt; free
/// variables are set to zero.
std::optional<RatVV> rat_solve(RatMat a, RatVV b);

/// Inverse of a square nonsingular rational matrix.
std::optional<RatMat> rat_inverse(RatMat a);

/// Determinant over the integers, fraction-free (Bareiss).
BigInt int_det(BigMat a);

/// Invariant factors d1 | d2 | ... of an integer matrix (nonzero diagonal
/// of the Smith normal form, made nonnegative).
std::vector<BigInt> smith_invariants(BigMat a);

}  // namespace gvt
