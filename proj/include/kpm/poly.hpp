#pragma once

#include <string>
#include <vector>

#include "kpm/scalar.hpp"

namespace kpm {

/// Dense univariate polynomial over Scalar. The zero polynomial has no
/// stored coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Scalar& c);
    explicit Poly(long n) : Poly(Scalar(n)) {}
    static Poly from_coeffs(std::vector<Scalar> c);
    static Poly monomial(int deg, const Scalar& c = Scalar(1));
    static Poly variable() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const Scalar& lead() const;
    Scalar at(int i) const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar eval(const Scalar& x) const;
    Poly derivative() const;
    Poly monic() const;
    Poly shift(int k) const;  // multiply by x^k, k >= 0

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Scalar& c, const Poly& a);
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    /// Division with remainder; the divisor's leading coefficient must be
    /// invertible.
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
    /// Exact quotient; throws MalformedInput if the remainder is nonzero.
    static Poly exact_div(const Poly& a, const Poly& b);
    static bool divides(const Poly& b, const Poly& a);
    /// Monic gcd over a field.
    static Poly gcd(Poly a, Poly b);

    std::size_t height() const;
    std::string str(const std::string& var = "x") const;

private:
    std::vector<Scalar> c_;
    void trim();
};

}  // namespace kpm
