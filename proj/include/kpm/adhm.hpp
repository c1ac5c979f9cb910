#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "kpm/linalg.hpp"
#include "kpm/matrix.hpp"

namespace kpm {

/// ADHM datum (alpha, beta, a, b): alpha, beta are d x d and a, b are d x 2,
/// all rational, subject to the quadratic constraint
/// [alpha, beta] + b a^t = 0. Whether the datum is also nondegenerate
/// (stable) is a computed predicate, not an invariant.
struct ADHMData {
    int d = 0;
    ScalarMatrix alpha, beta, a, b;
};

/// Shape- and rationality-checked constructor.
ADHMData make_adhm(int d, ScalarMatrix alpha, ScalarMatrix beta, ScalarMatrix a,
                   ScalarMatrix b);

/// Exact test of [alpha, beta] + b a^t = 0.
bool validate(const ADHMData& x);

/// The six coefficient blocks of the monad pencil A_Z = A_l l + A_m m + A_n n,
/// B_Z likewise, in the canonical bases: A_l = (I, 0, 0)^t, A_m = (0, I, 0)^t,
/// A_n = [alpha; beta; a^t], B_l = (0, I, 0), B_m = (-I, 0, 0),
/// B_n = (-beta, alpha, b).
struct MonadMaps {
    int d = 0;
    ScalarMatrix A_l, A_m, A_n;  // (2d+2) x d
    ScalarMatrix B_l, B_m, B_n;  // d x (2d+2)

    ScalarMatrix A_at(const Scalar& l, const Scalar& m, const Scalar& n) const;
    ScalarMatrix B_at(const Scalar& l, const Scalar& m, const Scalar& n) const;
};

/// Builds the monad maps; requires validate(x) (invalid-data error otherwise).
/// The basis convention is certified by B_n A_n = [alpha,beta] + b a^t = 0.
MonadMaps assemble(const ADHMData& x);

/// Checks B_Z A_Z = 0 as a polynomial identity in (l, m, n), coefficient by
/// coefficient (six block identities), plus B_l A_m = I and B_m A_l = -I.
/// Returns the name of the first failing identity, or nullptr.
const char* monad_identity_failure(const MonadMaps& mm);

struct EigenvectorWitness {
    Scalar lambda0, mu0;
    std::vector<Scalar> v;  // nonzero, length d
};

/// Searches for a nonzero v with alpha v = -lambda0 v, beta v = -mu0 v and
/// c^t v = 0 (c is d x 2). Complete: (lambda0, mu0) are enumerated over the
/// spectra of -alpha and -beta through the irreducible factors of the
/// characteristic polynomials, extending scalars to the composite tower and
/// splitting it dynamically when a zero divisor turns up.
std::optional<EigenvectorWitness> common_eigenvector_in_kernel(const ScalarMatrix& alpha,
                                                               const ScalarMatrix& beta,
                                                               const ScalarMatrix& c);

/// Condition (2): A_Z injective and B_Z surjective for every Z != 0. The
/// nu = 0 slice is automatic, so this reduces to the two one-sided
/// common-eigenvector searches (right-sided on (alpha, beta, a), left-sided
/// on (alpha^t, beta^t, b)).
bool nondegenerate(const ADHMData& x);

struct MonadFiber {
    ScalarMatrix kernel;  // (2d+2) x (d+2), basis of Ker B_Z
    ScalarMatrix image;   // (2d+2) x d, basis of Im A_Z
    ScalarMatrix reps;    // (2d+2) x 2, coset representatives of Ker/Im
};

/// Fiber of the monad bundle at a point Z of the projective plane given by
/// exact homogeneous coordinates. Scaling Z does not change the subquotient.
MonadFiber monad_fiber(const ADHMData& x, const std::array<Rat, 3>& z);

/// The two coset representatives (lexicographically earliest completion of
/// Im A_Z inside Ker B_Z).
ScalarMatrix fiber(const ADHMData& x, const std::array<Rat, 3>& z);

/// Certifies that the last two standard basis vectors of the middle space
/// give a frame of the fiber at sampled points of the fixed line nu = 0.
/// On failure reports the first failing point through `failing` if given.
bool standard_frame_check(const ADHMData& x, std::array<Rat, 3>* failing = nullptr);

/// Seeded generator of valid ADHM data (condition (1) holds by construction;
/// nondegeneracy is generic but not guaranteed). Deterministic per seed.
ADHMData random_adhm(int d, std::uint64_t seed);

}  // namespace kpm
