#pragma once

#include <map>
#include <string>

#include "kpm/adhm.hpp"
#include "kpm/laurent.hpp"

namespace kpm {

/// Change-of-frame matrix of the monad bundle restricted to the line through
/// P and Q, between exact polynomial frames over the two affine charts of
/// [s:u] -> sP + uQ. Entries are Laurent polynomials in the chart coordinate,
/// normalized to determinant 1. Rank defects along the line (including at
/// non-rational points) raise DegenerateData.
LaurentMatrix transition_on_line(const ADHMData& x, const std::array<Rat, 3>& p,
                                 const std::array<Rat, 3>& q);

/// Splitting exponent n (restriction is O(n) + O(-n)) via Birkhoff
/// factorization of the transition frame; 0 on generic lines.
int splitting_on_line(const ADHMData& x, const std::array<Rat, 3>& p,
                      const std::array<Rat, 3>& q, int trunc = 16);

struct LineSpec {
    std::array<Rat, 3> p, q;   // two distinct points spanning the line
    std::string label;
};

/// Two deterministic rational points spanning the line with dual coordinates
/// [du : dv : dw] (the locus du*l + dv*m + dw*n = 0).
LineSpec line_from_dual(const Rat& du, const Rat& dv, const Rat& dw);

struct ScanEntry {
    std::string label;
    int n = -1;          // splitting exponent; -1 when the line errored
    std::string error;   // empty on success
};

struct ScanReport {
    std::vector<ScanEntry> lines;
    std::map<int, int> histogram;  // splitting exponent -> count
    int errors = 0;
};

/// Per-line splitting survey; per-line failures are collected, not fatal.
/// Deterministic in the grid order.
ScanReport jumping_line_scan(const ADHMData& x, const std::vector<LineSpec>& grid,
                             int trunc = 16);

}  // namespace kpm
