#include "kpm/birkhoff.hpp"

#include <array>

#include "kpm/errors.hpp"

namespace kpm {

namespace {

int row_valuation(const LaurentMatrix& a, int i) {
    int v = INT_MAX;
    for (int j = 0; j < 2; ++j)
        if (!a(i, j).is_zero()) v = std::min(v, a(i, j).valuation());
    if (v == INT_MAX) throw MalformedInput("birkhoff: zero row in a det-1 loop");
    return v;
}

// Right-multiplies g by the 2x2 matrix e.
void rmul(LaurentMatrix& g, const LaurentMatrix& e) { g = g * e; }

}  // namespace

BirkhoffFactorization birkhoff(const LaurentMatrix& t, int trunc) {
    if (t.rows() != 2 || t.cols() != 2) throw MalformedInput("birkhoff needs a 2x2 matrix");
    if (det2x2(t) != LaurentPoly(1L)) throw MalformedInput("birkhoff: determinant is not 1");
    if (trunc <= exponent_spread(t))
        throw TruncationTooSmall("birkhoff: truncation order must exceed the exponent spread");

    LaurentMatrix a = t;
    LaurentMatrix gm = LaurentMatrix::identity(2);  // invariant: gm * a == t

    // Raise the row-valuation sum to 0 by row operations over polynomials in
    // t^-1. While v0 + v1 < 0 the leading vectors are forced proportional
    // (the t^{v0+v1} coefficient of det a vanishes), so a step always exists
    // and each step strictly raises the sum.
    while (true) {
        int v0 = row_valuation(a, 0), v1 = row_valuation(a, 1);
        if (v0 + v1 == 0) break;
        if (v0 + v1 > 0) throw MalformedInput("birkhoff: valuation sum exceeded det budget");
        const int i = (v0 <= v1) ? 0 : 1;
        const int j = 1 - i;
        const int vi = (i == 0) ? v0 : v1;
        const int vj = (i == 0) ? v1 : v0;
        std::array<Scalar, 2> lead_i = {a(i, 0).coeff(vi), a(i, 1).coeff(vi)};
        std::array<Scalar, 2> lead_j = {a(j, 0).coeff(vj), a(j, 1).coeff(vj)};
        int k = lead_j[0].is_zero() ? 1 : 0;
        Scalar c = lead_i[k] / lead_j[k];
        if (!(lead_i[0] == c * lead_j[0]) || !(lead_i[1] == c * lead_j[1]))
            throw MalformedInput("birkhoff: leading vectors not proportional");
        LaurentPoly f = LaurentPoly::monomial(vi - vj, c);
        for (int col = 0; col < 2; ++col) a(i, col) -= f * a(j, col);
        // gm <- gm * E^{-1} with E = I - f e_{ij}.
        LaurentMatrix einv = LaurentMatrix::identity(2);
        einv(i, j) = f;
        rmul(gm, einv);
    }

    int v0 = row_valuation(a, 0), v1 = row_valuation(a, 1);
    if (v0 < v1) {
        // Swap rows with the det-1 rotation.
        LaurentMatrix e(2, 2), einv(2, 2);
        e(0, 1) = LaurentPoly(1L);
        e(1, 0) = LaurentPoly(-1L);
        einv(0, 1) = LaurentPoly(-1L);
        einv(1, 0) = LaurentPoly(1L);
        a = e * a;
        rmul(gm, einv);
        std::swap(v0, v1);
    }

    BirkhoffFactorization out;
    out.n = v0;
    out.g_minus = gm;
    out.d = LaurentMatrix(2, 2);
    out.d(0, 0) = LaurentPoly::monomial(out.n);
    out.d(1, 1) = LaurentPoly::monomial(-out.n);
    out.g_plus = LaurentMatrix(2, 2);
    for (int j = 0; j < 2; ++j) {
        out.g_plus(0, j) = a(0, j).shifted(-out.n);
        out.g_plus(1, j) = a(1, j).shifted(out.n);
    }

    if (out.n < 0) throw MalformedInput("birkhoff: negative exponent");
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (!out.g_plus(i, j).is_zero() && out.g_plus(i, j).valuation() < 0)
                throw MalformedInput("birkhoff: positive factor has a pole");
            if (!out.g_minus(i, j).is_zero() && out.g_minus(i, j).degree() > 0)
                throw MalformedInput("birkhoff: negative factor not polynomial in 1/t");
        }
    if (det2x2(out.g_minus) != LaurentPoly(1L) || det2x2(out.g_plus) != LaurentPoly(1L))
        throw MalformedInput("birkhoff: factor determinant drifted");
    if (out.g_minus * out.d * out.g_plus != t)
        throw MalformedInput("birkhoff: round-trip verification failed");
    return out;
}

}  // namespace kpm
