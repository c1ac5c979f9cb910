#pragma once

#include "kpm/ratfunc.hpp"

namespace kpm {

/// Elementary-divisor data of a 2x2 Laurent matrix relative to the valuation
/// ring at t = 0: U * M * V = D = diag(t^k1, t^k2) exactly, with U, V
/// invertible over the valuation ring (entries of valuation >= 0 and
/// determinant of valuation 0) and k1 <= k2, k1 + k2 = val(det M).
struct SmithDVR {
    RatFuncMatrix U, V;
    LaurentMatrix D;
    int k1 = 0, k2 = 0;
};

SmithDVR smith_dvr(const LaurentMatrix& m);

}  // namespace kpm
