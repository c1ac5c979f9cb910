#include "kpm/sections.hpp"

#include <cstdlib>

#include "kpm/birkhoff.hpp"
#include "kpm/errors.hpp"
#include "kpm/linalg.hpp"

namespace kpm {

int vg_h0(const LoopMatrix& g, int k, int trunc) {
    if (trunc < g.spread() + std::abs(k) + 2)
        throw TruncationTooSmall("vg_h0: truncation order below spread + |k| + 2");

    // sigma = g tau with tau integral, so entry exponents of sigma sit in
    // [min val of g, k]; the pole-order budget at infinity is k.
    const LaurentMatrix& m = g.mat();
    const int lo = std::min(min_valuation(m), k);
    const int hi = k;
    if (hi < lo) return 0;
    const int per_comp = hi - lo + 1;

    LaurentMatrix ginv = adjugate2x2(m);
    const int clo = min_valuation(ginv) + lo;  // lowest exponent reachable in g^-1 sigma
    if (clo >= 0) return 2 * per_comp;         // no constraints at all
    const int crows = -clo;

    // Unknown (c, e): coefficient of t^e in component c of sigma.
    // Constraint (comp, mrow): coefficient of t^(clo + mrow) in (g^-1 sigma)_comp is 0.
    ScalarMatrix a(2 * crows, 2 * per_comp);
    for (int comp = 0; comp < 2; ++comp)
        for (int c = 0; c < 2; ++c)
            for (const auto& [e, coeff] : ginv(comp, c).terms())
                for (int eu = lo; eu <= hi; ++eu) {
                    int target = e + eu;
                    if (target >= 0 || target < clo) continue;
                    a(comp * crows + (target - clo), c * per_comp + (eu - lo)) += coeff;
                }
    return 2 * per_comp - rank_of(a);
}

int splitting_type_p1(const LoopMatrix& g, int trunc) {
    const int n = birkhoff(g.mat(), trunc).n;
    // Independent route: section counts of the twists 0 and -1.
    const int h0 = vg_h0(g, 0, std::max(trunc, g.spread() + 2));
    const int h0m1 = vg_h0(g, -1, std::max(trunc, g.spread() + 3));
    if (h0 != std::max(2, n + 1) || h0m1 != n)
        throw MalformedInput("splitting type: Birkhoff and section counts disagree");
    return n;
}

}  // namespace kpm
