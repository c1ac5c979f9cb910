#include "kpm/actions.hpp"

#include "kpm/errors.hpp"

namespace kpm {

ADHMData gl_act(const ScalarMatrix& g, const ADHMData& x) {
    if (g.rows() != x.d || g.cols() != x.d) throw MalformedInput("gl_act: g must be d x d");
    if (!validate(x)) throw MalformedInput("gl_act: invalid ADHM data");
    if (x.d == 0) return x;
    if (det_of(g).is_zero()) throw SingularInput("gl_act: singular g");
    ScalarMatrix ginv = inverse_of(g);
    ADHMData y = make_adhm(x.d, g * x.alpha * ginv, g * x.beta * ginv,
                           ginv.transpose() * x.a, g * x.b);
    if (!validate(y)) throw MalformedInput("gl_act: conjugation identity failed");
    return y;
}

ADHMData cstar_act(const Rat& z, const ADHMData& x) {
    if (sgn(z) == 0) throw MalformedInput("cstar_act: z must be nonzero");
    if (!validate(x)) throw MalformedInput("cstar_act: invalid ADHM data");
    ADHMData y = make_adhm(x.d, Scalar(z) * x.alpha, x.beta, Scalar(z) * x.a, x.b);
    if (!validate(y)) throw MalformedInput("cstar_act: scaling identity failed");
    return y;
}

std::array<Rat, 3> cstar_p2(const Rat& z, const std::array<Rat, 3>& z_point) {
    if (sgn(z) == 0) throw MalformedInput("cstar_p2: z must be nonzero");
    if (sgn(z_point[0]) == 0 && sgn(z_point[1]) == 0 && sgn(z_point[2]) == 0)
        throw MalformedInput("cstar_p2: zero point");
    return {z_point[0] / z, z_point[1], z_point[2]};
}

std::array<Rat, 4> pi_map(const std::array<Rat, 3>& x, const std::array<Rat, 2>& lm) {
    if (sgn(x[0]) == 0 && sgn(x[1]) == 0 && sgn(x[2]) == 0)
        throw MalformedInput("pi_map: zero triple");
    if (sgn(lm[0]) == 0 && sgn(lm[1]) == 0) throw MalformedInput("pi_map: zero line point");
    return {lm[0] * x[0], lm[0] * x[1], lm[0] * x[2], lm[1]};
}

namespace {

template <std::size_t N>
bool proj_equal_impl(const std::array<Rat, N>& a, const std::array<Rat, N>& b) {
    // Equal up to a nonzero scalar: all 2x2 minors vanish and supports match.
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    for (std::size_t i = 0; i < N; ++i)
        if ((sgn(a[i]) == 0) != (sgn(b[i]) == 0)) return false;
    return true;
}

}  // namespace

bool proj_equal(const std::array<Rat, 4>& a, const std::array<Rat, 4>& b) {
    return proj_equal_impl(a, b);
}

bool proj_equal3(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b) {
    return proj_equal_impl(a, b);
}

namespace {

// Verifies gl_act(g, x) == y entrywise.
bool exact_round_trip(const ScalarMatrix& g, const ADHMData& x, const ADHMData& y) {
    ADHMData gx = gl_act(g, x);
    return gx.alpha == y.alpha && gx.beta == y.beta && gx.a == y.a && gx.b == y.b;
}

}  // namespace

EquivResult gl_equivalent(const ADHMData& x, const ADHMData& y, int trial_budget) {
    if (x.d != y.d) throw MalformedInput("gl_equivalent: dimension mismatch");
    if (!validate(x) || !validate(y)) throw MalformedInput("gl_equivalent: invalid data");
    const int d = x.d;
    EquivResult out;
    if (d == 0) {
        out.status = EquivStatus::kFound;
        out.g = ScalarMatrix(0, 0);
        return out;
    }

    // Unknown vec(g), g_{pq} at index p*d + q.
    const int nvars = d * d;
    const int nrows = 2 * d * d + 4 * d;
    ScalarMatrix m(nrows, nvars), rhs(nrows, 1);
    int row = 0;
    // g alpha_x - alpha_y g = 0 and g beta_x - beta_y g = 0.
    for (int which = 0; which < 2; ++which) {
        const ScalarMatrix& cx = which ? x.beta : x.alpha;
        const ScalarMatrix& cy = which ? y.beta : y.alpha;
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j, ++row) {
                for (int q = 0; q < d; ++q) m(row, i * d + q) += cx(q, j);
                for (int p = 0; p < d; ++p) m(row, p * d + j) -= cy(i, p);
            }
    }
    // g^t a_y = a_x.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < 2; ++j, ++row) {
            for (int k = 0; k < d; ++k) m(row, k * d + i) += y.a(k, j);
            rhs(row, 0) = x.a(i, j);
        }
    // g b_x = b_y.
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < 2; ++j, ++row) {
            for (int k = 0; k < d; ++k) m(row, i * d + k) += x.b(k, j);
            rhs(row, 0) = y.b(i, j);
        }

    auto particular = solve_linear(m, rhs);
    if (!particular) return out;  // conclusive: empty solution set
    ScalarMatrix kern = kernel_basis(m);

    auto unvec = [d](const ScalarMatrix& v) {
        ScalarMatrix g(d, d);
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) g(p, q) = v(p * d + q, 0);
        return g;
    };

    ScalarMatrix g0 = unvec(*particular);
    if (kern.cols() == 0) {
        // Unique candidate: invertible or conclusively inequivalent.
        if (!det_of(g0).is_zero() && exact_round_trip(g0, x, y)) {
            out.status = EquivStatus::kFound;
            out.g = g0;
        }
        return out;
    }

    // Deterministic trial set: coefficient tuples over {0, 1, -1, 2, -2}.
    const long digits[5] = {0, 1, -1, 2, -2};
    const int mdim = kern.cols();
    std::vector<int> idx(mdim, 0);
    for (int trial = 0; trial < trial_budget; ++trial) {
        ScalarMatrix v = *particular;
        for (int c = 0; c < mdim; ++c) {
            if (idx[c] == 0) continue;
            for (int r = 0; r < v.rows(); ++r)
                v(r, 0) += Scalar(digits[idx[c]]) * kern(r, c);
        }
        ScalarMatrix g = unvec(v);
        if (!det_of(g).is_zero() && exact_round_trip(g, x, y)) {
            out.status = EquivStatus::kFound;
            out.g = g;
            return out;
        }
        int c = 0;
        while (c < mdim && ++idx[c] == 5) idx[c++] = 0;
        if (c == mdim) break;
    }
    out.status = EquivStatus::kInconclusive;
    return out;
}

bool verify_lemma42(const ADHMData& x, const Rat& z, const std::array<Rat, 3>& z_point) {
    if (sgn(z) == 0) throw MalformedInput("verify_lemma42: z must be nonzero");
    const int d = x.d;
    ADHMData zx = cstar_act(z, x);
    std::array<Rat, 3> zp = cstar_p2(z, z_point);

    // Middle-space maps: P = diag(I_d, z I_d, I_2) satisfies, exactly,
    // B^{(x)}_{Z'} P = B^{(zx)}_{Z} and z A^{(x)}_{Z'} = P A^{(zx)}_{Z}.
    MonadMaps mx = assemble(x);
    MonadMaps mzx = assemble(zx);
    ScalarMatrix pmat(2 * d + 2, 2 * d + 2), smat(2 * d + 2, 2 * d + 2);
    for (int i = 0; i < d; ++i) {
        pmat(i, i) = Scalar(1);
        pmat(d + i, d + i) = Scalar(z);
        smat(i, i) = Scalar(z);
        smat(d + i, d + i) = Scalar(1);
    }
    for (int i = 2 * d; i < 2 * d + 2; ++i) {
        pmat(i, i) = Scalar(1);
        smat(i, i) = Scalar(z);
    }
    ScalarMatrix bx = mx.B_at(Scalar(zp[0]), Scalar(zp[1]), Scalar(zp[2]));
    ScalarMatrix ax = mx.A_at(Scalar(zp[0]), Scalar(zp[1]), Scalar(zp[2]));
    ScalarMatrix bzx = mzx.B_at(Scalar(z_point[0]), Scalar(z_point[1]), Scalar(z_point[2]));
    ScalarMatrix azx = mzx.A_at(Scalar(z_point[0]), Scalar(z_point[1]), Scalar(z_point[2]));
    if (bx * pmat != bzx) return false;
    if (Scalar(z) * ax != pmat * azx) return false;

    // Subspace transport by S = z P^{-1} = diag(z I_d, I_d, z I_2).
    MonadFiber fx = monad_fiber(x, zp);
    MonadFiber fzx = monad_fiber(zx, z_point);
    auto same_span = [](const ScalarMatrix& u, const ScalarMatrix& v) {
        int ru = rank_of(u), rv = rank_of(v);
        return ru == rv && rank_of(ScalarMatrix::hstack(u, v)) == ru;
    };
    if (!same_span(smat * fx.kernel, fzx.kernel)) return false;
    if (!same_span(smat * fx.image, fzx.image)) return false;
    return true;
}

}  // namespace kpm
