#pragma once

#include "kpm/laurent.hpp"

namespace kpm {

/// Exact rational function in the uniformizer t, kept in reduced form with
/// the denominator a polynomial with constant term 1 (so t-powers and units
/// live in the numerator). Elements of valuation >= 0 with inverse of
/// valuation <= 0 are exactly the units of the local ring at t = 0.
class RatFunc {
public:
    RatFunc() = default;
    explicit RatFunc(long n) : num_(LaurentPoly(n)) {}
    explicit RatFunc(const Scalar& c) : num_(LaurentPoly(c)) {}
    explicit RatFunc(const LaurentPoly& p) : num_(p) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    bool is_zero() const { return num_.is_zero(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    /// t-adic valuation; LaurentPoly::kValOfZero for 0.
    int valuation() const { return num_.is_zero() ? LaurentPoly::kValOfZero : num_.valuation(); }
    bool is_laurent() const { return den_.degree() == 0; }
    LaurentPoly to_laurent() const;

    RatFunc operator-() const;
    RatFunc inverse() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
    RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }
    RatFunc& operator-=(const RatFunc& o) { *this = *this - o; return *this; }
    RatFunc& operator*=(const RatFunc& o) { *this = *this * o; return *this; }

    std::size_t height() const { return num_.height() + den_.height(); }
    std::string str(const std::string& var = "t") const;

private:
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1L);
    void reduce();
};

using RatFuncMatrix = Matrix<RatFunc>;

RatFuncMatrix to_ratfunc(const LaurentMatrix& m);

}  // namespace kpm
