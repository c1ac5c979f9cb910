#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kpm/errors.hpp"
#include "kpm/rational.hpp"

namespace kpm {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

class Scalar;

// Thrown when inverting a zero divisor of a tower extension whose modulus is
// reducible over the base field. Carries a proper monic factor of the modulus
// so the caller can split the quotient ring and redo the computation in each
// branch (dynamic evaluation).
struct ZeroDivisorSplit : std::runtime_error {
    ZeroDivisorSplit(FieldPtr f, std::vector<Scalar> g);
    FieldPtr field;
    std::vector<Scalar> factor;  // monic, coefficients over field->base()
};

/// An exact scalar: a rational number, or an element of a number field
/// presented as a univariate quotient ring over its base field. Towers are
/// built by successive extension; in practice at most two generators.
class Scalar {
public:
    Scalar() : rat_(0) {}
    Scalar(long n) : rat_(n) {}
    Scalar(const Rat& q) : rat_(q) {}
    Scalar(const Int& n) : rat_(n) {}

    /// The class of the variable in base[x]/(modulus).
    static Scalar generator(const FieldPtr& f);
    /// Element with the given coefficients (over f->base(), degree < f->degree()).
    static Scalar with_coeffs(const FieldPtr& f, std::vector<Scalar> coeffs);

    bool is_rational() const { return field_ == nullptr; }
    const Rat& rat() const;
    const FieldPtr& field() const { return field_; }
    /// Coefficients over field()->base(), trailing zeros trimmed.
    const std::vector<Scalar>& coeffs() const { return co_; }

    bool is_zero() const;
    bool is_one() const { return *this == Scalar(1); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Multiplicative inverse. Throws SingularInput on zero and
    /// ZeroDivisorSplit on a zero divisor of a reducible tower level.
    Scalar inverse() const;

    /// Reinterprets this element of `from` in the smaller quotient `to`
    /// (same base, modulus of `to` divides modulus of this->field()).
    Scalar reduce_into(const FieldPtr& to) const;

    /// Promotes into field f (f == nullptr keeps rationals as-is).
    Scalar promote(const FieldPtr& f) const;

    std::size_t height() const;
    std::string str() const;

private:
    FieldPtr field_;  // nullptr: plain rational
    Rat rat_;         // value when field_ == nullptr
    std::vector<Scalar> co_;
};

/// A univariate quotient ring base[x]/(m) with m monic. Base nullptr means
/// the rationals. Fields compare by identity; elements of distinct Field
/// objects do not mix even if the moduli coincide.
class Field : public std::enable_shared_from_this<Field> {
public:
    /// monic_tail = (c0, ..., c_{n-1}) for the modulus x^n + c_{n-1}x^{n-1} + ... + c0,
    /// coefficients over `base`. Irreducibility is the caller's contract;
    /// public construction sites verify it over the rationals.
    static FieldPtr make(FieldPtr base, std::vector<Scalar> monic_tail, std::string var);

    int degree() const { return static_cast<int>(tail_.size()); }
    const FieldPtr& base() const { return base_; }
    /// Coefficients c0..c_{n-1}; the modulus itself is monic of degree n.
    const std::vector<Scalar>& modulus_tail() const { return tail_; }
    const std::string& var() const { return var_; }
    int tower_height() const { return height_; }

private:
    Field() = default;
    FieldPtr base_;
    std::vector<Scalar> tail_;
    std::string var_;
    int height_ = 1;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace kpm
