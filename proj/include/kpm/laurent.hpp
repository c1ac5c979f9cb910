#pragma once

#include <climits>
#include <map>
#include <string>

#include "kpm/matrix.hpp"
#include "kpm/poly.hpp"
#include "kpm/scalar.hpp"

namespace kpm {

/// Finite Laurent polynomial in one formal variable (written t by default):
/// finitely many exact coefficients indexed by integer exponents, no stored
/// zeros. The valuation of 0 is the sentinel kValOfZero.
class LaurentPoly {
public:
    static constexpr int kValOfZero = INT_MIN;

    LaurentPoly() = default;
    explicit LaurentPoly(const Scalar& c);
    explicit LaurentPoly(long n) : LaurentPoly(Scalar(n)) {}
    static LaurentPoly monomial(int exp, const Scalar& c = Scalar(1));
    static LaurentPoly from_poly(const Poly& p, int shift = 0);

    bool is_zero() const { return c_.empty(); }
    /// Lowest exponent with nonzero coefficient; kValOfZero for 0.
    int valuation() const { return c_.empty() ? kValOfZero : c_.begin()->first; }
    /// Highest exponent with nonzero coefficient; kValOfZero for 0.
    int degree() const { return c_.empty() ? kValOfZero : c_.rbegin()->first; }
    Scalar coeff(int exp) const;
    const std::map<int, Scalar>& terms() const { return c_; }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Scalar& c, const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
    LaurentPoly& operator+=(const LaurentPoly& o) { *this = *this + o; return *this; }
    LaurentPoly& operator-=(const LaurentPoly& o) { *this = *this - o; return *this; }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    /// Multiplication by t^k.
    LaurentPoly shifted(int k) const;
    /// Substitution t -> t^-1.
    LaurentPoly inverted_variable() const;
    /// Drops all terms with exponent >= n.
    LaurentPoly truncated_above(int n) const;

    /// The polynomial part: requires valuation >= 0 (or zero).
    Poly to_poly() const;

    std::size_t height() const;
    std::string str(const std::string& var = "t") const;

private:
    std::map<int, Scalar> c_;
    void insert_term(int exp, const Scalar& c);
};

using LaurentMatrix = Matrix<LaurentPoly>;

/// Minimal valuation over all entries; kValOfZero for the zero matrix.
int min_valuation(const LaurentMatrix& m);
/// Largest exponent spread max(degree) - min(valuation) over nonzero entries.
int exponent_spread(const LaurentMatrix& m);
LaurentPoly det2x2(const LaurentMatrix& m);
/// Adjugate of a 2x2 matrix; together with det = 1 this is the exact inverse.
LaurentMatrix adjugate2x2(const LaurentMatrix& m);

}  // namespace kpm
