#include "kpm/laurent.hpp"

#include <sstream>

#include "kpm/errors.hpp"

namespace kpm {

LaurentPoly::LaurentPoly(const Scalar& c) {
    if (!c.is_zero()) c_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int exp, const Scalar& c) {
    LaurentPoly p;
    if (!c.is_zero()) p.c_.emplace(exp, c);
    return p;
}

LaurentPoly LaurentPoly::from_poly(const Poly& p, int shift) {
    LaurentPoly out;
    for (int i = 0; i <= p.degree(); ++i) {
        Scalar c = p.at(i);
        if (!c.is_zero()) out.c_.emplace(i + shift, c);
    }
    return out;
}

Scalar LaurentPoly::coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Scalar(0) : it->second;
}

void LaurentPoly::insert_term(int exp, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = c_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) c_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p;
    for (const auto& [e, c] : c_) p.c_.emplace(e, -c);
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.c_) out.insert_term(e, c);
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) out.insert_term(ea + eb, ca * cb);
    return out;
}

LaurentPoly operator*(const Scalar& c, const LaurentPoly& a) {
    LaurentPoly out;
    for (const auto& [e, v] : a.c_) out.insert_term(e, c * v);
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return (a - b).is_zero(); }

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_.emplace(e + k, c);
    return out;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) out.c_.emplace(-e, c);
    return out;
}

LaurentPoly LaurentPoly::truncated_above(int n) const {
    LaurentPoly out;
    for (const auto& [e, c] : c_) {
        if (e < n) out.c_.emplace(e, c);
    }
    return out;
}

Poly LaurentPoly::to_poly() const {
    if (!is_zero() && valuation() < 0)
        throw MalformedInput("Laurent polynomial has a pole at 0");
    std::vector<Scalar> c(is_zero() ? 0 : degree() + 1, Scalar(0));
    for (const auto& [e, v] : c_) c[e] = v;
    return Poly::from_coeffs(std::move(c));
}

std::size_t LaurentPoly::height() const {
    std::size_t h = 1;
    for (const auto& [e, c] : c_) h += c.height();
    return h;
}

std::string LaurentPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : c_) {
        if (!first) os << " + ";
        first = false;
        const bool unit_coeff = c.is_one() && e != 0;
        if (!unit_coeff) os << c.str();
        if (e != 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

int min_valuation(const LaurentMatrix& m) {
    int v = LaurentPoly::kValOfZero;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            int w = m(i, j).valuation();
            if (v == LaurentPoly::kValOfZero || w < v) v = w;
        }
    return v;
}

int exponent_spread(const LaurentMatrix& m) {
    int lo = LaurentPoly::kValOfZero, hi = LaurentPoly::kValOfZero;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            int v = m(i, j).valuation(), d = m(i, j).degree();
            if (lo == LaurentPoly::kValOfZero || v < lo) lo = v;
            if (hi == LaurentPoly::kValOfZero || d > hi) hi = d;
        }
    if (lo == LaurentPoly::kValOfZero) return 0;
    return hi - lo;
}

LaurentPoly det2x2(const LaurentMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw MalformedInput("det2x2 needs a 2x2 matrix");
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

LaurentMatrix adjugate2x2(const LaurentMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) throw MalformedInput("adjugate2x2 needs a 2x2 matrix");
    LaurentMatrix a(2, 2);
    a(0, 0) = m(1, 1);
    a(0, 1) = -m(0, 1);
    a(1, 0) = -m(1, 0);
    a(1, 1) = m(0, 0);
    return a;
}

}  // namespace kpm
