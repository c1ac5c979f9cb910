#pragma once

#include <random>

#include "kpm/adhm.hpp"
#include "kpm/lattice.hpp"

namespace kpm::testing {

inline LaurentPoly lp(std::initializer_list<std::pair<int, long>> terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += LaurentPoly::monomial(e, Scalar(c));
    return p;
}

inline LaurentMatrix loop2x2(const LaurentPoly& a, const LaurentPoly& b,
                             const LaurentPoly& c, const LaurentPoly& d) {
    LaurentMatrix m(2, 2);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

// diag(t^k, t^-k)
inline LaurentMatrix tpow(int k) {
    return loop2x2(LaurentPoly::monomial(k), LaurentPoly(), LaurentPoly(),
                   LaurentPoly::monomial(-k));
}

inline Rat small_rat(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-2, 2);
    std::uniform_int_distribution<int> den(1, 2);
    Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

// Random Laurent polynomial with exponents in [lo, hi] and a couple of terms.
inline LaurentPoly random_laurent(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> expd(lo, hi);
    std::uniform_int_distribution<int> nterms(1, 2);
    LaurentPoly p;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(expd(rng), Scalar(small_rat(rng)));
    return p;
}

// Random det-1 polynomial loop: product of elementary and diagonal factors.
inline LoopMatrix random_loop(std::mt19937_64& rng, int factors = 3) {
    LaurentMatrix m = LaurentMatrix::identity(2);
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> kd(-1, 1);
    for (int i = 0; i < factors; ++i) {
        LaurentMatrix e = LaurentMatrix::identity(2);
        switch (kind(rng)) {
            case 0:
                e(0, 1) = random_laurent(rng, -2, 2);
                break;
            case 1:
                e(1, 0) = random_laurent(rng, -2, 2);
                break;
            default: {
                int k = kd(rng);
                e = tpow(k);
                break;
            }
        }
        m = m * e;
    }
    return LoopMatrix::from_matrix(m);
}

// Random element of SL(2, R): valuation >= 0 entries, det exactly 1.
inline LoopMatrix random_integral_loop(std::mt19937_64& rng, int factors = 3) {
    LaurentMatrix m = LaurentMatrix::identity(2);
    std::uniform_int_distribution<int> kind(0, 1);
    for (int i = 0; i < factors; ++i) {
        LaurentMatrix e = LaurentMatrix::identity(2);
        if (kind(rng) == 0)
            e(0, 1) = random_laurent(rng, 0, 2);
        else
            e(1, 0) = random_laurent(rng, 0, 2);
        m = m * e;
    }
    return LoopMatrix::from_matrix(m);
}

// The d = 1 workhorse fixture: alpha = beta = 0, a = (1,0), b = (0,1).
inline ADHMData d1_fixture() {
    ScalarMatrix alpha(1, 1), beta(1, 1), a(1, 2), b(1, 2);
    a(0, 0) = Scalar(1);
    b(0, 1) = Scalar(1);
    return make_adhm(1, alpha, beta, a, b);
}

inline ScalarMatrix mat(int rows, int cols, std::initializer_list<long> entries) {
    ScalarMatrix m(rows, cols);
    auto it = entries.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = Scalar(*it++);
    return m;
}

// Brute-force nondegeneracy oracle: samples (lambda, mu) on a rational grid
// and looks for rank defects of the nu = 1 slices. Can only confirm failure.
inline bool grid_finds_degeneracy(const ADHMData& x, int steps = 30) {
    if (x.d == 0) return false;
    MonadMaps mm = assemble(x);
    for (int i = 0; i < steps; ++i)
        for (int j = 0; j < steps; ++j) {
            Rat l(2 * i - steps, 3), m(2 * j - steps, 3);
            l.canonicalize();
            m.canonicalize();
            ScalarMatrix az = mm.A_at(Scalar(l), Scalar(m), Scalar(1));
            ScalarMatrix bz = mm.B_at(Scalar(l), Scalar(m), Scalar(1));
            if (rank_of(az) < x.d || rank_of(bz) < x.d) return true;
        }
    return false;
}

// Random nondegenerate sample (resamples on the rare degenerate draw).
inline ADHMData random_nondegenerate(int d, std::uint64_t seed) {
    for (std::uint64_t k = 0; k < 64; ++k) {
        ADHMData x = random_adhm(d, seed + 1000003 * k);
        if (nondegenerate(x)) return x;
    }
    throw GeneratorExhausted("no nondegenerate sample found");
}

}  // namespace kpm::testing
