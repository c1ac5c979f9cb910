#include "kpm/schubert.hpp"

#include <sstream>

#include "kpm/errors.hpp"

namespace kpm {

SchubertClass SchubertClass::eps(unsigned long i, const Int& coeff) {
    SchubertClass s;
    if (sgn(coeff) != 0) s.c_.emplace(i, coeff);
    return s;
}

Int SchubertClass::coeff(unsigned long i) const {
    auto it = c_.find(i);
    return it == c_.end() ? Int(0) : it->second;
}

void SchubertClass::insert_term(unsigned long i, const Int& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = c_.emplace(i, c);
    if (!fresh) {
        it->second += c;
        if (sgn(it->second) == 0) c_.erase(it);
    }
}

SchubertClass SchubertClass::operator-() const {
    SchubertClass s;
    for (const auto& [i, c] : c_) s.c_.emplace(i, -c);
    return s;
}

SchubertClass operator+(const SchubertClass& a, const SchubertClass& b) {
    SchubertClass out = a;
    for (const auto& [i, c] : b.c_) out.insert_term(i, c);
    return out;
}

SchubertClass operator-(const SchubertClass& a, const SchubertClass& b) { return a + (-b); }

SchubertClass operator*(const Int& c, const SchubertClass& a) {
    SchubertClass out;
    for (const auto& [i, v] : a.c_) out.insert_term(i, c * v);
    return out;
}

bool operator==(const SchubertClass& a, const SchubertClass& b) { return (a - b).is_zero(); }

std::string SchubertClass::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : c_) {
        if (!first) os << " + ";
        first = false;
        if (c != 1) os << int_str(c) << "*";
        os << "eps" << i;
    }
    return os.str();
}

SchubertClass eps_product(long i, long j) {
    if (i < 0 || j < 0) throw MalformedInput("negative Schubert index");
    return SchubertClass::eps(static_cast<unsigned long>(i + j),
                              binomial(static_cast<unsigned long>(i + j),
                                       static_cast<unsigned long>(i)));
}

SchubertClass class_product(const SchubertClass& x, const SchubertClass& y) {
    SchubertClass out;
    for (const auto& [i, ci] : x.c_)
        for (const auto& [j, cj] : y.c_)
            out.insert_term(i + j, ci * cj * binomial(i + j, i));
    return out;
}

P3Class operator+(const P3Class& a, const P3Class& b) {
    P3Class out;
    for (int i = 0; i < 4; ++i) out.c[i] = a.c[i] + b.c[i];
    return out;
}

P3Class operator*(const P3Class& a, const P3Class& b) {
    P3Class out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; i + j < 4; ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

std::string P3Class::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < 4; ++i) {
        if (sgn(c[i]) == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << int_str(c[i]);
        if (i >= 1) os << "*h";
        if (i >= 2) os << "^" << i;
    }
    return first ? "0" : os.str();
}

P3Class PullbackResult::eps_image(unsigned long i) const {
    P3Class out;
    if (i <= 3) out.c[i] = image[i];
    return out;
}

PullbackResult p3_pullback(const Int& d) {
    if (sgn(d) < 0) throw MalformedInput("degree must be nonnegative");
    PullbackResult out;
    out.image[0] = 1;
    Rat power(d);
    Int fact(1);
    for (int i = 1; i <= 3; ++i) {
        if (i > 1) {
            power *= Rat(d);
            fact *= i;
        }
        Rat value = power / Rat(fact);
        if (value.get_den() != 1) {
            out.admissible = false;
            out.obstruction_index = i;
            out.obstruction_value = value;
            return out;
        }
        out.image[i] = value.get_num();
    }
    out.admissible = true;
    return out;
}

bool admissible_degree(const Int& d) { return p3_pullback(d).admissible; }

}  // namespace kpm
