#pragma once

#include <utility>
#include <vector>

#include "kpm/poly.hpp"

namespace kpm {

struct RationalFactorization {
    Rat unit;  // leading coefficient of the input
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible over Q, multiplicity
};

/// Complete factorization into irreducibles over the rationals (squarefree
/// split, rational roots, then Kronecker interpolation for the rest). Input
/// coefficients must be rational. Desk-scale: guarded against explosion.
RationalFactorization factor_rational(const Poly& f);

bool irreducible_rational(const Poly& f);

/// Roots in Q with multiplicities.
std::vector<std::pair<Rat, int>> rational_roots(const Poly& f);

}  // namespace kpm
