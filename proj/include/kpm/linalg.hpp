#pragma once

#include "kpm/factor.hpp"
#include "kpm/matrix.hpp"
#include "kpm/poly.hpp"

namespace kpm {

struct RankKernelImage {
    int rank = 0;
    ScalarMatrix kernel;  // columns form a basis of the right kernel
    ScalarMatrix image;   // columns (pivot columns of the input) span the image
};

/// Exact rank / kernel / image over a field; the returned bases are verified
/// by multiplication before returning.
RankKernelImage rank_kernel_image(const ScalarMatrix& m);

/// Characteristic polynomial det(xI - M), exact, rational entries.
Poly charpoly(const ScalarMatrix& m);

struct Eigenvalue {
    Scalar value;        // a designated root; lives in Q[x]/(minpoly) when degree > 1
    int multiplicity;    // multiplicity of the irreducible factor in the charpoly
    Poly minpoly;        // monic irreducible over Q
    int conjugates;      // degree of minpoly = number of conjugate roots represented
};

/// Eigenvalues of a rational square matrix: one representative per
/// irreducible factor of the characteristic polynomial, exact.
std::vector<Eigenvalue> charpoly_eigenvalues(const ScalarMatrix& m);

}  // namespace kpm
