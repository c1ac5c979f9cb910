#include "kpm/poly.hpp"

#include <sstream>

#include "kpm/errors.hpp"

namespace kpm {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly::Poly(const Scalar& c) {
    if (!c.is_zero()) c_ = {c};
}

Poly Poly::from_coeffs(std::vector<Scalar> c) {
    Poly p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

Poly Poly::monomial(int deg, const Scalar& c) {
    if (deg < 0) throw MalformedInput("monomial of negative degree");
    Poly p;
    if (!c.is_zero()) {
        p.c_.assign(deg + 1, Scalar(0));
        p.c_.back() = c;
    }
    return p;
}

const Scalar& Poly::lead() const {
    if (c_.empty()) throw MalformedInput("leading coefficient of 0");
    return c_.back();
}

Scalar Poly::at(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[i];
}

Scalar Poly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Scalar(long(i)) * c_[i]);
    return from_coeffs(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return lead().inverse() * *this;
}

Poly Poly::shift(int k) const {
    if (k < 0) throw MalformedInput("negative shift");
    if (is_zero()) return *this;
    std::vector<Scalar> c(c_.size() + k, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return from_coeffs(std::move(c));
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), Scalar(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly::from_coeffs(std::move(c));
}

Poly operator*(const Scalar& c, const Poly& a) {
    std::vector<Scalar> out(a.c_.size());
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = c * a.c_[i];
    return Poly::from_coeffs(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) { return (a - b).is_zero(); }

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw SingularInput("polynomial division by zero");
    const Scalar lead_inv = b.lead().inverse();
    std::vector<Scalar> rem = a.c_;
    std::vector<Scalar> quot;
    if (rem.size() >= b.c_.size()) quot.assign(rem.size() - b.c_.size() + 1, Scalar(0));
    while (rem.size() >= b.c_.size() && !rem.empty()) {
        Scalar c = rem.back() * lead_inv;
        std::size_t shift = rem.size() - b.c_.size();
        if (!c.is_zero()) {
            quot[shift] = c;
            for (std::size_t i = 0; i < b.c_.size(); ++i) rem[shift + i] -= c * b.c_[i];
        }
        rem.pop_back();
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
    }
    q = from_coeffs(std::move(quot));
    r = from_coeffs(std::move(rem));
}

Poly Poly::exact_div(const Poly& a, const Poly& b) {
    Poly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw MalformedInput("inexact polynomial division");
    return q;
}

bool Poly::divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    Poly q, r;
    divmod(a, b, q, r);
    return r.is_zero();
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::size_t Poly::height() const {
    std::size_t h = 1;
    for (const auto& c : c_) h += c.height();
    return h;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool unit_coeff = c_[i].is_one() && i > 0;
        if (!unit_coeff) os << c_[i].str();
        if (i > 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace kpm
