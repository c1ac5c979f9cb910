#include "kpm/lines.hpp"

#include "kpm/birkhoff.hpp"
#include "kpm/errors.hpp"
#include "kpm/polydiag.hpp"
#include "kpm/ratfunc.hpp"

namespace kpm {

namespace {

PolyMatrix pencil(const ScalarMatrix& at_var, const ScalarMatrix& at_const) {
    PolyMatrix m(at_var.rows(), at_var.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m(i, j) = Poly::from_coeffs({at_const(i, j), at_var(i, j)});
    return m;
}

// Exact polynomial frame of Ker B / Im A over one affine chart
// Z(s) = s * Zvar + Zconst. Detects rank defects anywhere on the chart
// (over the complex numbers) through non-unit diagonal entries.
PolyMatrix chart_frame(const MonadMaps& mm, const std::array<Rat, 3>& zvar,
                       const std::array<Rat, 3>& zconst) {
    const int d = mm.d;
    ScalarMatrix bv = mm.B_at(Scalar(zvar[0]), Scalar(zvar[1]), Scalar(zvar[2]));
    ScalarMatrix bc = mm.B_at(Scalar(zconst[0]), Scalar(zconst[1]), Scalar(zconst[2]));
    ScalarMatrix av = mm.A_at(Scalar(zvar[0]), Scalar(zvar[1]), Scalar(zvar[2]));
    ScalarMatrix ac = mm.A_at(Scalar(zconst[0]), Scalar(zconst[1]), Scalar(zconst[2]));

    PolyMatrix b = pencil(bv, bc);
    PolyDiag bd = poly_diagonalize(b);
    if (bd.rank != d) throw DegenerateData("B rank defect along the line");
    for (int i = 0; i < d; ++i)
        if (bd.S(i, i).degree() != 0)
            throw DegenerateData("B drops rank at a point of the line");
    PolyMatrix kern(b.cols(), b.cols() - d);
    for (int j = d; j < b.cols(); ++j)
        for (int i = 0; i < b.cols(); ++i) kern(i, j - d) = bd.V(i, j);

    PolyMatrix a = pencil(av, ac);
    PolyMatrix phi = poly_solve_exact(kern, a);  // kern * phi = a
    PolyDiag pd = poly_diagonalize(phi);
    if (pd.rank != d) throw DegenerateData("A rank defect along the line");
    for (int i = 0; i < d; ++i)
        if (pd.S(i, i).degree() != 0)
            throw DegenerateData("A drops rank at a point of the line");

    // Quotient basis: the last two columns of Uinv, pushed into the kernel.
    PolyMatrix sel(d + 2, 2);
    for (int i = 0; i < d + 2; ++i)
        for (int j = 0; j < 2; ++j) sel(i, j) = pd.Uinv(i, d + j);
    return kern * sel;
}

RatFunc substitute_inverse(const Poly& p) {
    // p(1/y) as a rational function in y.
    LaurentPoly out;
    for (int i = 0; i <= p.degree(); ++i)
        out += LaurentPoly::monomial(-i, p.at(i));
    return RatFunc(out);
}

}  // namespace

LaurentMatrix transition_on_line(const ADHMData& x, const std::array<Rat, 3>& p,
                                 const std::array<Rat, 3>& q) {
    // The two points must be projectively distinct.
    ScalarMatrix pts(2, 3);
    for (int j = 0; j < 3; ++j) {
        pts(0, j) = Scalar(p[j]);
        pts(1, j) = Scalar(q[j]);
    }
    if (rank_of(pts) != 2) throw MalformedInput("line needs two distinct points");

    MonadMaps mm = assemble(x);
    const int d = x.d;
    // Chart A: Z = x*P + Q; chart B: Z = P + y*Q. On the overlap x = 1/y the
    // two parameterizations differ by the scalar 1/y, which leaves the monad
    // fiber unchanged.
    PolyMatrix fa = chart_frame(mm, p, q);
    PolyMatrix fb = chart_frame(mm, q, p);

    // Solve [F_B | A_{Z_B(y)}] * [T; W] = F_A(1/y) over rational functions.
    ScalarMatrix av = mm.A_at(Scalar(q[0]), Scalar(q[1]), Scalar(q[2]));
    ScalarMatrix ac = mm.A_at(Scalar(p[0]), Scalar(p[1]), Scalar(p[2]));
    PolyMatrix ab = pencil(av, ac);
    RatFuncMatrix lhs(2 * d + 2, d + 2);
    for (int i = 0; i < 2 * d + 2; ++i) {
        for (int j = 0; j < 2; ++j) lhs(i, j) = RatFunc(LaurentPoly::from_poly(fb(i, j)));
        for (int j = 0; j < d; ++j) lhs(i, 2 + j) = RatFunc(LaurentPoly::from_poly(ab(i, j)));
    }
    RatFuncMatrix rhs(2 * d + 2, 2);
    for (int i = 0; i < 2 * d + 2; ++i)
        for (int j = 0; j < 2; ++j) rhs(i, j) = substitute_inverse(fa(i, j));
    auto sol = solve_linear(lhs, rhs);
    if (!sol) throw DegenerateData("transition solve failed");

    LaurentMatrix t(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (!(*sol)(i, j).is_laurent())
                throw DegenerateData("transition entries not Laurent");
            t(i, j) = (*sol)(i, j).to_laurent();
        }
    // Trivial determinant: det T is a nonzero constant; rescale to det 1.
    LaurentPoly det = det2x2(t);
    if (det.is_zero() || det.valuation() != 0 || det.degree() != 0)
        throw DegenerateData("transition determinant is not a unit");
    Scalar c = det.coeff(0).inverse();
    t(0, 0) = c * t(0, 0);
    t(1, 0) = c * t(1, 0);
    return t;
}

int splitting_on_line(const ADHMData& x, const std::array<Rat, 3>& p,
                      const std::array<Rat, 3>& q, int trunc) {
    LaurentMatrix t = transition_on_line(x, p, q);
    // The transition lives in the chart coordinate at Q's chart, where a
    // trivialization factors as (regular at 0) * D * (regular at infinity);
    // invert the variable to match the g_minus * D * g_plus convention.
    LaurentMatrix flipped(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) flipped(i, j) = t(i, j).inverted_variable();
    return birkhoff(flipped, std::max(trunc, exponent_spread(flipped) + 1)).n;
}

LineSpec line_from_dual(const Rat& du, const Rat& dv, const Rat& dw) {
    if (sgn(du) == 0 && sgn(dv) == 0 && sgn(dw) == 0)
        throw MalformedInput("zero dual coordinates");
    ScalarMatrix row(1, 3);
    row(0, 0) = Scalar(du);
    row(0, 1) = Scalar(dv);
    row(0, 2) = Scalar(dw);
    ScalarMatrix k = kernel_basis(row);
    LineSpec out;
    for (int i = 0; i < 3; ++i) {
        out.p[i] = k(i, 0).rat();
        out.q[i] = k(i, 1).rat();
    }
    out.label = "[" + rat_str(du) + ":" + rat_str(dv) + ":" + rat_str(dw) + "]";
    return out;
}

ScanReport jumping_line_scan(const ADHMData& x, const std::vector<LineSpec>& grid,
                             int trunc) {
    ScanReport report;
    for (const auto& line : grid) {
        ScanEntry entry;
        entry.label = line.label;
        try {
            entry.n = splitting_on_line(x, line.p, line.q, trunc);
            ++report.histogram[entry.n];
        } catch (const std::exception& e) {
            entry.error = e.what();
            ++report.errors;
        }
        report.lines.push_back(std::move(entry));
    }
    return report;
}

}  // namespace kpm
