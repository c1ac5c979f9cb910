#include "kpm/dvr.hpp"

#include "kpm/errors.hpp"

namespace kpm {

namespace {

void swap_rows(RatFuncMatrix& a, int r0, int r1) {
    for (int j = 0; j < a.cols(); ++j) std::swap(a(r0, j), a(r1, j));
}

void swap_cols(RatFuncMatrix& a, int c0, int c1) {
    for (int i = 0; i < a.rows(); ++i) std::swap(a(i, c0), a(i, c1));
}

int val_or_huge(const RatFunc& x) {
    return x.is_zero() ? INT_MAX : x.valuation();
}

void check_unit_over_R(const RatFuncMatrix& u, const char* what) {
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!u(i, j).is_zero() && u(i, j).valuation() < 0)
                throw MalformedInput(std::string(what) + ": entry of negative valuation");
    RatFunc det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    if (det.is_zero() || det.valuation() != 0)
        throw MalformedInput(std::string(what) + ": determinant is not a unit");
}

}  // namespace

SmithDVR smith_dvr(const LaurentMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw MalformedInput("smith_dvr needs a 2x2 matrix");
    if (det2x2(m).is_zero()) throw SingularInput("smith_dvr: singular input");

    RatFuncMatrix a = to_ratfunc(m);
    RatFuncMatrix u = RatFuncMatrix::identity(2);
    RatFuncMatrix v = RatFuncMatrix::identity(2);

    // Move a minimal-valuation entry to the pivot position.
    int br = 0, bc = 0, bv = INT_MAX;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (val_or_huge(a(i, j)) < bv) bv = val_or_huge(a(i, j)), br = i, bc = j;
    if (br != 0) swap_rows(a, 0, 1), swap_rows(u, 0, 1);
    if (bc != 0) swap_cols(a, 0, 1), swap_cols(v, 0, 1);

    // One exact elimination step each side; the multipliers lie in the
    // valuation ring because the pivot has minimal valuation.
    RatFunc pivot_inv = a(0, 0).inverse();
    if (!a(1, 0).is_zero()) {
        RatFunc f = a(1, 0) * pivot_inv;
        for (int j = 0; j < 2; ++j) {
            a(1, j) -= f * a(0, j);
            u(1, j) -= f * u(0, j);
        }
    }
    if (!a(0, 1).is_zero()) {
        RatFunc f = a(0, 1) * pivot_inv;
        for (int i = 0; i < 2; ++i) {
            a(i, 1) -= f * a(i, 0);
            v(i, 1) -= f * v(i, 0);
        }
    }

    SmithDVR out;
    out.k1 = a(0, 0).valuation();
    out.k2 = a(1, 1).valuation();
    // Scale the diagonal to exact powers of t by units of the valuation ring.
    RatFunc u0 = RatFunc(LaurentPoly::monomial(out.k1)) * a(0, 0).inverse();
    RatFunc u1 = RatFunc(LaurentPoly::monomial(out.k2)) * a(1, 1).inverse();
    for (int j = 0; j < 2; ++j) {
        u(0, j) = u0 * u(0, j);
        u(1, j) = u1 * u(1, j);
    }
    out.U = u;
    out.V = v;
    out.D = LaurentMatrix(2, 2);
    out.D(0, 0) = LaurentPoly::monomial(out.k1);
    out.D(1, 1) = LaurentPoly::monomial(out.k2);

    check_unit_over_R(out.U, "smith_dvr U");
    check_unit_over_R(out.V, "smith_dvr V");
    if (out.k1 > out.k2) throw MalformedInput("smith_dvr: divisor order violated");
    if (out.U * to_ratfunc(m) * out.V != to_ratfunc(out.D))
        throw MalformedInput("smith_dvr: round-trip verification failed");
    return out;
}

}  // namespace kpm
