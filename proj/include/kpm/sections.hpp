#pragma once

#include "kpm/lattice.hpp"

namespace kpm {

/// Dimension of the space of global sections of the glued rank-2 sheaf
/// attached to the loop g, twisted by k at infinity: sections are Laurent
/// vectors with entry exponents <= k whose transport g^-1 sigma is integral.
/// Exact; N only gates the caller's truncation contract (it must be at least
/// the exponent spread of g plus |k| + 2).
int vg_h0(const LoopMatrix& g, int k, int trunc = 16);

/// Splitting exponent n of the glued bundle on the projective line,
/// O(n) + O(-n): computed via the Birkhoff route and cross-validated against
/// the section counts vg_h0(g, 0) = max(2, n+1) and vg_h0(g, -1) = n.
int splitting_type_p1(const LoopMatrix& g, int trunc = 16);

}  // namespace kpm
