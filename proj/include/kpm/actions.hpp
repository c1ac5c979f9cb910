#pragma once

#include <optional>

#include "kpm/adhm.hpp"

namespace kpm {

/// g . (alpha, beta, a, b) = (g alpha g^-1, g beta g^-1, (g^-1)^t a, g b).
/// Preserves condition (1); asserted exactly.
ADHMData gl_act(const ScalarMatrix& g, const ADHMData& x);

/// z . (alpha, beta, a, b) = (z alpha, beta, z a, b), z != 0.
ADHMData cstar_act(const Rat& z, const ADHMData& x);

/// z . [l : m : n] = [l/z : m : n].
std::array<Rat, 3> cstar_p2(const Rat& z, const std::array<Rat, 3>& z_point);

/// ((x1,x2,x3), [l : m]) -> [l x1 : l x2 : l x3 : m]; [0:1] always lands on
/// the base point [0:0:0:1].
std::array<Rat, 4> pi_map(const std::array<Rat, 3>& x, const std::array<Rat, 2>& lm);

bool proj_equal(const std::array<Rat, 4>& a, const std::array<Rat, 4>& b);
bool proj_equal3(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b);

enum class EquivStatus {
    kFound,         // an invertible g with gl_act(g, x) = y, verified
    kNoSolution,    // conclusive: the linear system has no invertible solution
    kInconclusive,  // solution space nonzero but no invertible element found
                    // within the trial budget
};

struct EquivResult {
    EquivStatus status = EquivStatus::kNoSolution;
    std::optional<ScalarMatrix> g;
};

/// Orbit-equivalence solver for the GL(d) action: solves the linear system
/// {g alpha_x = alpha_y g, g beta_x = beta_y g, g^t a_y = a_x, g b_x = b_y}
/// and searches a deterministic set of integer combinations of the solution
/// space for an invertible element.
EquivResult gl_equivalent(const ADHMData& x, const ADHMData& y, int trial_budget = 64);

/// Machine check of the C*-equivariance of the monad construction at a
/// sample (x, z, Z): the middle-space rescaling diag(z I_d, I_d, z I_2)
/// carries Ker B and Im A at Z' = z . Z for x onto Ker B and Im A at Z for
/// z . x, and the transported pencils agree exactly.
bool verify_lemma42(const ADHMData& x, const Rat& z, const std::array<Rat, 3>& z_point);

}  // namespace kpm
