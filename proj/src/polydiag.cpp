#include "kpm/polydiag.hpp"

#include "kpm/errors.hpp"

namespace kpm {

namespace {

void swap_rows(PolyMatrix& m, int r0, int r1) {
    for (int j = 0; j < m.cols(); ++j) std::swap(m(r0, j), m(r1, j));
}

void swap_cols(PolyMatrix& m, int c0, int c1) {
    for (int i = 0; i < m.rows(); ++i) std::swap(m(i, c0), m(i, c1));
}

// row_i -= q * row_k
void row_op(PolyMatrix& m, int i, int k, const Poly& q) {
    for (int j = 0; j < m.cols(); ++j) m(i, j) -= q * m(k, j);
}

void col_op(PolyMatrix& m, int j, int k, const Poly& q) {
    for (int i = 0; i < m.rows(); ++i) m(i, j) -= q * m(i, k);
}

}  // namespace

PolyDiag poly_diagonalize(PolyMatrix m) {
    PolyDiag out;
    const int r = m.rows(), c = m.cols();
    out.U = PolyMatrix::identity(r);
    out.Uinv = PolyMatrix::identity(r);
    out.V = PolyMatrix::identity(c);

    for (int k = 0; k < std::min(r, c); ++k) {
        for (;;) {
            // Minimal-degree nonzero entry of the trailing submatrix.
            int bi = -1, bj = -1, bd = 0;
            for (int i = k; i < r; ++i)
                for (int j = k; j < c; ++j) {
                    if (m(i, j).is_zero()) continue;
                    int deg = m(i, j).degree();
                    if (bi < 0 || deg < bd) bi = i, bj = j, bd = deg;
                }
            if (bi < 0) {
                out.rank = k;
                out.S = std::move(m);
                return out;
            }
            if (bi != k) {
                swap_rows(m, bi, k);
                swap_rows(out.U, bi, k);
                swap_cols(out.Uinv, bi, k);
            }
            if (bj != k) {
                swap_cols(m, bj, k);
                swap_cols(out.V, bj, k);
            }
            bool clean = true;
            for (int i = k + 1; i < r; ++i) {
                if (m(i, k).is_zero()) continue;
                Poly q, rem;
                Poly::divmod(m(i, k), m(k, k), q, rem);
                row_op(m, i, k, q);
                row_op(out.U, i, k, q);
                // Uinv <- Uinv * E^{-1}: col_k += q * col_i.
                for (int t = 0; t < r; ++t) out.Uinv(t, k) += q * out.Uinv(t, i);
                if (!rem.is_zero()) clean = false;
            }
            for (int j = k + 1; j < c; ++j) {
                if (m(k, j).is_zero()) continue;
                Poly q, rem;
                Poly::divmod(m(k, j), m(k, k), q, rem);
                col_op(m, j, k, q);
                col_op(out.V, j, k, q);
                if (!rem.is_zero()) clean = false;
            }
            if (clean) {
                bool done = true;
                for (int i = k + 1; i < r; ++i)
                    if (!m(i, k).is_zero()) done = false;
                for (int j = k + 1; j < c; ++j)
                    if (!m(k, j).is_zero()) done = false;
                if (done) break;
            }
        }
    }
    int rank = 0;
    for (int k = 0; k < std::min(r, c); ++k)
        if (!m(k, k).is_zero()) ++rank;
    out.rank = rank;
    out.S = std::move(m);
    return out;
}

PolyMatrix poly_kernel_module(const PolyMatrix& m) {
    PolyDiag d = poly_diagonalize(m);
    PolyMatrix k(m.cols(), m.cols() - d.rank);
    for (int j = d.rank; j < m.cols(); ++j)
        for (int i = 0; i < m.cols(); ++i) k(i, j - d.rank) = d.V(i, j);
    return k;
}

PolyMatrix poly_solve_exact(const PolyMatrix& k, const PolyMatrix& a) {
    if (k.rows() != a.rows()) throw MalformedInput("poly_solve_exact: shape mismatch");
    PolyDiag d = poly_diagonalize(k);
    if (d.rank != k.cols()) throw MalformedInput("poly_solve_exact: basis not free");
    PolyMatrix ua = d.U * a;
    for (int i = d.rank; i < ua.rows(); ++i)
        for (int j = 0; j < ua.cols(); ++j)
            if (!ua(i, j).is_zero())
                throw MalformedInput("poly_solve_exact: columns outside the span");
    PolyMatrix psi(k.cols(), a.cols());
    for (int i = 0; i < d.rank; ++i)
        for (int j = 0; j < a.cols(); ++j) psi(i, j) = Poly::exact_div(ua(i, j), d.S(i, i));
    return d.V * psi;
}

}  // namespace kpm
