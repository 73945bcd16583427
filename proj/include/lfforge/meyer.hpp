#pragma once

#include "lfforge/symplectic.hpp"

namespace lfforge {

// Signature 2-cocycle on the integer symplectic group, computed exactly
// over Q: the signature of the symmetrized bilinear form
//   b((x1,y1),(x2,y2)) = (x1+y1)^T J (I-B) y2
// restricted to the solution space
//   V_{A,B} = {(x,y) in Q^{2g} x Q^{2g} : (A^{-1}-I)x + (B-I)y = 0}.
// Satisfies the cocycle identity
//   tau(A,B) + tau(A*B,C) == tau(A,B*C) + tau(B,C)
// and conjugation invariance; |tau| <= 2g on everything exercised by the
// test suite.
long long meyer_tau(const SympMatrix& a, const SympMatrix& b);

// Signature of the Lefschetz fibration over the sphere whose monodromy
// factorization is w. The product of w must be the identity
// (NonTrivialMonodromy otherwise) and every twist nonseparating-type.
// Computed as the cocycle sum
//   sum_{j=1}^{s-1} tau(P_j, A_{j+1})   with   P_j = A_j * ... * A_1,
// whose overall sign is calibrated once so that the genus-1 twelve-twist
// word (t_a t_b)^6 -- the elliptic fibration with e = 12 -- yields -8.
long long signature_from_word(const TwistWord& w);

}  // namespace lfforge
