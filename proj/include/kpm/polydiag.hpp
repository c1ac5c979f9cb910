#pragma once

#include "kpm/matrix.hpp"
#include "kpm/poly.hpp"

namespace kpm {

using PolyMatrix = Matrix<Poly>;

/// Diagonalization over Q[x] by unimodular row and column operations:
/// U * M * V = S with S diagonal (nonzero entries first). U and V are
/// unimodular; Uinv is maintained alongside so callers can pull columns back.
struct PolyDiag {
    PolyMatrix U, Uinv, V, S;
    int rank = 0;
};

PolyDiag poly_diagonalize(PolyMatrix m);

/// Free basis (as matrix columns) of the solution module {v : M v = 0} over
/// Q[x]. The basis is saturated: its evaluations span the pointwise kernel
/// wherever M has full rank.
PolyMatrix poly_kernel_module(const PolyMatrix& m);

/// Solves K * F = A exactly over Q[x], where the columns of A lie in the
/// column module spanned by K. Throws MalformedInput if no exact solution.
PolyMatrix poly_solve_exact(const PolyMatrix& k, const PolyMatrix& a);

}  // namespace kpm
