#pragma once

#include <vector>

#include "lfforge/rational.hpp"

namespace lfforge {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

// Basis of the right null space {v : m v = 0}, one basis vector per row of
// the returned matrix. Gauss-Jordan elimination over Q, exact.
RatMat nullspace(const RatMat& m);

// Signature (positive minus negative inertia count) of a symmetric rational
// matrix, by symmetric congruence diagonalization with exact pivoting.
// Degenerate directions contribute zero. Throws Error if s is not symmetric.
long long symmetric_signature(RatMat s);

}  // namespace lfforge
