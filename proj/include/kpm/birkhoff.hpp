#pragma once

#include "kpm/laurent.hpp"

namespace kpm {

/// Birkhoff factorization T = g_minus * diag(t^n, t^-n) * g_plus of a 2x2
/// Laurent loop with det = 1: g_minus has exponents <= 0 (a polynomial loop
/// in t^-1), g_plus has exponents >= 0, both of determinant 1, and n >= 0 is
/// the splitting exponent. For polynomial loops the factorization is exact,
/// so the mod-t^N congruence holds for every N.
struct BirkhoffFactorization {
    LaurentMatrix g_minus, d, g_plus;
    int n = 0;
};

/// trunc must exceed the exponent spread of T (TruncationTooSmall otherwise;
/// retry with a larger value). det != 1 is malformed input.
BirkhoffFactorization birkhoff(const LaurentMatrix& t, int trunc = 16);

}  // namespace kpm
