#include "kpm/ratfunc.hpp"

#include "kpm/errors.hpp"

namespace kpm {

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw SingularInput("zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1L);
        return;
    }
    // Shift t-powers into the numerator.
    const int vd = den_.valuation();
    const int vn = num_.valuation();
    Poly pn = num_.shifted(-vn).to_poly();
    Poly pd = den_.shifted(-vd).to_poly();
    Poly g = Poly::gcd(pn, pd);
    if (g.degree() > 0) {
        pn = Poly::exact_div(pn, g);
        pd = Poly::exact_div(pd, g);
    }
    // Make the denominator's constant term 1.
    Scalar c0 = pd.at(0).inverse();
    pn = c0 * pn;
    pd = c0 * pd;
    num_ = LaurentPoly::from_poly(pn, vn - vd);
    den_ = LaurentPoly::from_poly(pd, 0);
}

LaurentPoly RatFunc::to_laurent() const {
    if (!is_laurent()) throw MalformedInput("rational function is not a Laurent polynomial");
    // den is the constant 1 after reduction.
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw SingularInput("division by zero");
    return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
}

std::string RatFunc::str(const std::string& var) const {
    if (is_laurent()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFuncMatrix to_ratfunc(const LaurentMatrix& m) {
    RatFuncMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = RatFunc(m(i, j));
    return out;
}

}  // namespace kpm
