#pragma once

#include "kpm/dvr.hpp"
#include "kpm/laurent.hpp"

namespace kpm {

/// A 2x2 Laurent-polynomial loop with determinant exactly 1. The identity
/// loop is the base point of the lattice model.
class LoopMatrix {
public:
    static LoopMatrix identity();
    /// Validates det = 1 (malformed input otherwise).
    static LoopMatrix from_matrix(LaurentMatrix m);

    const LaurentMatrix& mat() const { return m_; }
    LoopMatrix inverse() const;  // adjugate; exact since det = 1
    friend LoopMatrix operator*(const LoopMatrix& a, const LoopMatrix& b);
    friend bool operator==(const LoopMatrix& a, const LoopMatrix& b) { return a.m_ == b.m_; }

    int spread() const { return exponent_spread(m_); }

private:
    explicit LoopMatrix(LaurentMatrix m) : m_(std::move(m)) {}
    LaurentMatrix m_;
};

/// The lattice g . L0 spanned over the valuation ring by the columns of g,
/// together with its invariant factors (k1, k2) relative to L0. Since
/// det g = 1, k1 = -k2 and the index n = k2 >= 0 satisfies
/// t^n L0 <= L <= t^-n L0 with dim(L / t^n L0) = 2n.
class Lattice {
public:
    static Lattice from_group(const LoopMatrix& g);

    const LoopMatrix& generator() const { return g_; }
    int k1() const { return k1_; }
    int k2() const { return k2_; }
    /// Minimal d with L in L_d.
    int index() const { return k2_; }

    /// Equality of lattices: g^-1 g' integral (all entries of valuation >= 0).
    bool equals(const Lattice& other) const;

private:
    Lattice(LoopMatrix g, int k1, int k2) : g_(std::move(g)), k1_(k1), k2_(k2) {}
    LoopMatrix g_;
    int k1_, k2_;
};

Lattice lattice_from_group(const LoopMatrix& g);
int lattice_index(const Lattice& l);

/// Membership in L_d, decided via the invariant factors AND re-derived from
/// the two explicit inclusion checks plus the 2d-dimension count; the two
/// routes must agree.
bool in_Ld(const Lattice& l, int d);

}  // namespace kpm
