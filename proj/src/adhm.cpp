#include "kpm/adhm.hpp"

#include <random>
#include <sstream>

#include "kpm/errors.hpp"

namespace kpm {

namespace {

void require_rational(const ScalarMatrix& m, const char* what) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_rational())
                throw MalformedInput(std::string(what) + ": rational entries required");
}

std::string point_str(const std::array<Rat, 3>& z) {
    return "(" + rat_str(z[0]) + ", " + rat_str(z[1]) + ", " + rat_str(z[2]) + ")";
}

}  // namespace

ADHMData make_adhm(int d, ScalarMatrix alpha, ScalarMatrix beta, ScalarMatrix a,
                   ScalarMatrix b) {
    if (d < 0) throw MalformedInput("ADHM size must be nonnegative");
    if (alpha.rows() != d || alpha.cols() != d || beta.rows() != d || beta.cols() != d)
        throw MalformedInput("alpha, beta must be d x d");
    if (a.rows() != d || a.cols() != 2 || b.rows() != d || b.cols() != 2)
        throw MalformedInput("a, b must be d x 2");
    require_rational(alpha, "alpha");
    require_rational(beta, "beta");
    require_rational(a, "a");
    require_rational(b, "b");
    return ADHMData{d, std::move(alpha), std::move(beta), std::move(a), std::move(b)};
}

bool validate(const ADHMData& x) {
    ScalarMatrix c = x.alpha * x.beta - x.beta * x.alpha + x.b * x.a.transpose();
    return c.is_zero();
}

ScalarMatrix MonadMaps::A_at(const Scalar& l, const Scalar& m, const Scalar& n) const {
    return l * A_l + m * A_m + n * A_n;
}

ScalarMatrix MonadMaps::B_at(const Scalar& l, const Scalar& m, const Scalar& n) const {
    return l * B_l + m * B_m + n * B_n;
}

MonadMaps assemble(const ADHMData& x) {
    if (!validate(x)) throw MalformedInput("ADHM condition [alpha,beta] + b a^t = 0 fails");
    const int d = x.d;
    MonadMaps mm;
    mm.d = d;
    mm.A_l = ScalarMatrix(2 * d + 2, d);
    mm.A_m = ScalarMatrix(2 * d + 2, d);
    mm.A_n = ScalarMatrix(2 * d + 2, d);
    mm.B_l = ScalarMatrix(d, 2 * d + 2);
    mm.B_m = ScalarMatrix(d, 2 * d + 2);
    mm.B_n = ScalarMatrix(d, 2 * d + 2);
    for (int i = 0; i < d; ++i) {
        mm.A_l(i, i) = Scalar(1);
        mm.A_m(d + i, i) = Scalar(1);
        mm.B_l(i, d + i) = Scalar(1);
        mm.B_m(i, i) = Scalar(-1);
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            mm.A_n(i, j) = x.alpha(i, j);
            mm.A_n(d + i, j) = x.beta(i, j);
            mm.B_n(i, j) = -x.beta(i, j);
            mm.B_n(i, d + j) = x.alpha(i, j);
        }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < 2; ++j) {
            mm.A_n(2 * d + j, i) = x.a(i, j);  // bottom block is a^t
            mm.B_n(i, 2 * d + j) = x.b(i, j);
        }
    // Basis convention certificate: B_n A_n = [alpha, beta] + b a^t = 0.
    if (!(mm.B_n * mm.A_n).is_zero())
        throw MalformedInput("monad basis certificate failed");
    return mm;
}

const char* monad_identity_failure(const MonadMaps& mm) {
    const auto id = ScalarMatrix::identity(mm.d);
    if (!(mm.B_l * mm.A_l).is_zero()) return "B_l A_l = 0";
    if (!(mm.B_m * mm.A_m).is_zero()) return "B_m A_m = 0";
    if (!(mm.B_n * mm.A_n).is_zero()) return "B_n A_n = 0";
    if (!((mm.B_l * mm.A_m + mm.B_m * mm.A_l).is_zero())) return "B_l A_m + B_m A_l = 0";
    if (!((mm.B_l * mm.A_n + mm.B_n * mm.A_l).is_zero())) return "B_l A_n + B_n A_l = 0";
    if (!((mm.B_m * mm.A_n + mm.B_n * mm.A_m).is_zero())) return "B_m A_n + B_n A_m = 0";
    if (mm.B_l * mm.A_m != id) return "B_l A_m = I";
    if (mm.B_m * mm.A_l != -id) return "B_m A_l = -I";
    return nullptr;
}

namespace {

// Stacks the eigen-system for a fixed scalar pair.
ScalarMatrix eigen_stack(const ScalarMatrix& alpha, const ScalarMatrix& beta,
                         const ScalarMatrix& c, const Scalar& l0, const Scalar& m0) {
    const int d = alpha.rows();
    ScalarMatrix top = alpha;
    ScalarMatrix mid = beta;
    for (int i = 0; i < d; ++i) {
        top(i, i) += l0;
        mid(i, i) += m0;
    }
    return ScalarMatrix::vstack(ScalarMatrix::vstack(top, mid), c.transpose());
}

// Kernel search over all branches of base[y]/(modulus); splits the modulus on
// zero divisors (dynamic evaluation). `l0_base` lives over `base` (or Q).
std::optional<EigenvectorWitness> branch_search(const ScalarMatrix& alpha,
                                                const ScalarMatrix& beta,
                                                const ScalarMatrix& c, const Scalar& l0_base,
                                                const FieldPtr& base,
                                                const std::vector<Scalar>& modulus_tail,
                                                int depth) {
    if (depth > 8) throw MalformedInput("tower split recursion too deep");
    auto field = Field::make(base, modulus_tail, "s");
    Scalar l0 = l0_base.promote(field);
    Scalar m0 = Scalar::generator(field);
    try {
        ScalarMatrix m = eigen_stack(alpha, beta, c, l0, m0);
        ScalarMatrix kern = kernel_basis(m);
        if (kern.cols() == 0) return std::nullopt;
        EigenvectorWitness w;
        w.lambda0 = l0;
        w.mu0 = m0;
        for (int i = 0; i < kern.rows(); ++i) w.v.push_back(kern(i, 0));
        return w;
    } catch (const ZeroDivisorSplit& split) {
        if (!same_field(split.field, field)) throw;
        // modulus = h * (modulus / h); search both branches.
        Poly h = Poly::from_coeffs(split.factor);
        std::vector<Scalar> full = modulus_tail;
        full.push_back(Scalar(1));
        Poly quot = Poly::exact_div(Poly::from_coeffs(full), h);
        auto tail_of = [](const Poly& p) {
            std::vector<Scalar> t(p.coeffs().begin(), p.coeffs().end() - 1);
            Scalar lead = p.lead();
            if (!lead.is_one())
                for (auto& x : t) x = x / lead;
            return t;
        };
        if (auto w = branch_search(alpha, beta, c, l0_base, base, tail_of(h), depth + 1))
            return w;
        return branch_search(alpha, beta, c, l0_base, base, tail_of(quot), depth + 1);
    }
}

}  // namespace

std::optional<EigenvectorWitness> common_eigenvector_in_kernel(const ScalarMatrix& alpha,
                                                               const ScalarMatrix& beta,
                                                               const ScalarMatrix& c) {
    const int d = alpha.rows();
    if (alpha.cols() != d || beta.rows() != d || beta.cols() != d)
        throw MalformedInput("alpha, beta must be square of equal size");
    if (c.rows() != d || c.cols() != 2) throw MalformedInput("c must be d x 2");
    require_rational(alpha, "alpha");
    require_rational(beta, "beta");
    require_rational(c, "c");
    if (d == 0) return std::nullopt;

    auto eig_a = charpoly_eigenvalues(-alpha);
    auto eig_b = charpoly_eigenvalues(-beta);
    for (const auto& ea : eig_a) {
        // lambda0 lives in Q or in K1 = Q[x]/(F).
        FieldPtr k1;
        Scalar l0;
        if (ea.minpoly.degree() == 1) {
            l0 = ea.value;
        } else {
            std::vector<Scalar> tail(ea.minpoly.coeffs().begin(), ea.minpoly.coeffs().end() - 1);
            k1 = Field::make(nullptr, tail, "r");
            l0 = Scalar::generator(k1);
        }
        for (const auto& eb : eig_b) {
            if (eb.minpoly.degree() == 1) {
                Scalar m0 = eb.value;
                Scalar l0p = k1 ? l0 : l0;  // already in its field
                ScalarMatrix m = eigen_stack(alpha, beta, c, l0p, m0);
                ScalarMatrix kern = kernel_basis(m);
                if (kern.cols() > 0) {
                    EigenvectorWitness w;
                    w.lambda0 = l0p;
                    w.mu0 = m0.promote(l0p.field());
                    for (int i = 0; i < kern.rows(); ++i) w.v.push_back(kern(i, 0));
                    return w;
                }
            } else {
                std::vector<Scalar> tail;
                for (auto it = eb.minpoly.coeffs().begin(); it != eb.minpoly.coeffs().end() - 1;
                     ++it)
                    tail.push_back(k1 ? it->promote(k1) : *it);
                if (auto w = branch_search(alpha, beta, c, l0, k1, tail, 0)) return w;
            }
        }
    }
    return std::nullopt;
}

bool nondegenerate(const ADHMData& x) {
    if (!validate(x)) throw MalformedInput("ADHM condition (1) fails");
    if (x.d == 0) return true;
    if (common_eigenvector_in_kernel(x.alpha, x.beta, x.a)) return false;
    if (common_eigenvector_in_kernel(x.alpha.transpose(), x.beta.transpose(), x.b))
        return false;
    return true;
}

MonadFiber monad_fiber(const ADHMData& x, const std::array<Rat, 3>& z) {
    if (sgn(z[0]) == 0 && sgn(z[1]) == 0 && sgn(z[2]) == 0)
        throw MalformedInput("fiber at the zero triple");
    MonadMaps mm = assemble(x);
    ScalarMatrix bz = mm.B_at(Scalar(z[0]), Scalar(z[1]), Scalar(z[2]));
    ScalarMatrix az = mm.A_at(Scalar(z[0]), Scalar(z[1]), Scalar(z[2]));
    auto bdec = rank_kernel_image(bz);
    if (bdec.rank != x.d)
        throw DegenerateData("B_Z rank defect at Z = " + point_str(z));
    if (rank_of(az) != x.d)
        throw DegenerateData("A_Z rank defect at Z = " + point_str(z));

    MonadFiber out;
    out.kernel = bdec.kernel;
    out.image = az;
    // Complete Im A_Z to Ker B_Z by the lexicographically earliest kernel columns.
    ScalarMatrix current = az;
    int rank = x.d;
    out.reps = ScalarMatrix(2 * x.d + 2, 2);
    int taken = 0;
    for (int j = 0; j < out.kernel.cols() && taken < 2; ++j) {
        ScalarMatrix trial = ScalarMatrix::hstack(current, out.kernel.col(j));
        if (rank_of(trial) > rank) {
            for (int i = 0; i < out.kernel.rows(); ++i) out.reps(i, taken) = out.kernel(i, j);
            current = std::move(trial);
            ++rank;
            ++taken;
        }
    }
    if (taken != 2) throw DegenerateData("fiber dimension defect at Z = " + point_str(z));
    return out;
}

ScalarMatrix fiber(const ADHMData& x, const std::array<Rat, 3>& z) {
    return monad_fiber(x, z).reps;
}

bool standard_frame_check(const ADHMData& x, std::array<Rat, 3>* failing) {
    static const std::array<std::array<long, 2>, 8> samples = {
        {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {2, 1}, {1, 2}, {1, 3}, {3, 2}}};
    MonadMaps mm = assemble(x);
    for (const auto& [l, m] : samples) {
        std::array<Rat, 3> z = {Rat(l), Rat(m), Rat(0)};
        ScalarMatrix az = mm.A_at(Scalar(z[0]), Scalar(z[1]), Scalar(0));
        ScalarMatrix bz = mm.B_at(Scalar(z[0]), Scalar(z[1]), Scalar(0));
        ScalarMatrix frame(2 * x.d + 2, 2);
        frame(2 * x.d, 0) = Scalar(1);
        frame(2 * x.d + 1, 1) = Scalar(1);
        bool ok = (bz * frame).is_zero() &&
                  rank_of(ScalarMatrix::hstack(az, frame)) == x.d + 2;
        if (!ok) {
            if (failing) *failing = z;
            return false;
        }
    }
    return true;
}

namespace {

Rat random_rat(std::mt19937_64& rng, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    for (;;) {
        Rat q(num(rng), den(rng));
        q.canonicalize();
        if (!nonzero || sgn(q) != 0) return q;
    }
}

}  // namespace

ADHMData random_adhm(int d, std::uint64_t seed) {
    if (d < 0) throw MalformedInput("ADHM size must be nonnegative");
    std::mt19937_64 rng(seed);
    ScalarMatrix alpha(d, d), beta(d, d), a(d, 2), b(d, 2);
    if (d == 0) return make_adhm(0, alpha, beta, a, b);

    for (int i = 0; i < d; ++i)
        for (int j = 0; j < 2; ++j) a(i, j) = Scalar(random_rat(rng));
    // Rows of b orthogonal to the matching rows of a, so b a^t has zero
    // diagonal and [alpha, beta] = -b a^t is solvable with diagonal alpha.
    for (int i = 0; i < d; ++i) {
        Rat c = random_rat(rng, /*nonzero=*/true);
        if (a(i, 0).is_zero() && a(i, 1).is_zero()) {
            b(i, 0) = Scalar(random_rat(rng));
            b(i, 1) = Scalar(random_rat(rng));
        } else {
            b(i, 0) = Scalar(-c) * a(i, 1);
            b(i, 1) = Scalar(c) * a(i, 0);
        }
    }
    ScalarMatrix p = -(b * a.transpose());
    Rat shift = random_rat(rng);
    for (int i = 0; i < d; ++i) alpha(i, i) = Scalar(Rat(i + 1) + shift);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            beta(i, j) = (i == j) ? Scalar(random_rat(rng))
                                  : p(i, j) / Scalar(Rat(i - j));
    ADHMData x = make_adhm(d, alpha, beta, a, b);
    if (!validate(x)) throw GeneratorExhausted("random_adhm: construction failed");

    // Randomize the frame by conjugation (the GL(d) action formulas).
    std::uniform_int_distribution<int> gent(-2, 2);
    for (int attempt = 0; attempt < 64; ++attempt) {
        ScalarMatrix g(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) g(i, j) = Scalar(long(gent(rng)));
        if (det_of(g).is_zero()) continue;
        ScalarMatrix ginv = inverse_of(g);
        ADHMData y = make_adhm(d, g * x.alpha * ginv, g * x.beta * ginv,
                               ginv.transpose() * x.a, g * x.b);
        if (!validate(y)) throw GeneratorExhausted("random_adhm: conjugation broke validity");
        return y;
    }
    throw GeneratorExhausted("random_adhm: no invertible frame change found");
}

}  // namespace kpm
