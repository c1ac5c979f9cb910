#pragma once

#include <array>
#include <map>
#include <string>

#include "kpm/rational.hpp"

namespace kpm {

/// Integer combination sum c_i * eps_i of the Schubert basis classes of the
/// even cohomology of the infinite Grassmannian; eps_0 is the unit and
/// eps_i * eps_j = C(i+j, i) eps_{i+j}.
class SchubertClass {
public:
    SchubertClass() = default;
    static SchubertClass eps(unsigned long i, const Int& coeff = Int(1));

    bool is_zero() const { return c_.empty(); }
    Int coeff(unsigned long i) const;
    const std::map<unsigned long, Int>& terms() const { return c_; }

    SchubertClass operator-() const;
    friend SchubertClass operator+(const SchubertClass& a, const SchubertClass& b);
    friend SchubertClass operator-(const SchubertClass& a, const SchubertClass& b);
    friend SchubertClass operator*(const Int& c, const SchubertClass& a);
    friend bool operator==(const SchubertClass& a, const SchubertClass& b);
    friend bool operator!=(const SchubertClass& a, const SchubertClass& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<unsigned long, Int> c_;  // degree index -> nonzero integer
    void insert_term(unsigned long i, const Int& c);
    friend SchubertClass class_product(const SchubertClass&, const SchubertClass&);
};

/// eps_i * eps_j = C(i+j, i) eps_{i+j}.
SchubertClass eps_product(long i, long j);

/// Bilinear extension of eps_product.
SchubertClass class_product(const SchubertClass& x, const SchubertClass& y);

/// Element of H*(P^3): c0 + c1 h + c2 h^2 + c3 h^3, with h^4 = 0.
struct P3Class {
    std::array<Int, 4> c = {Int(0), Int(0), Int(0), Int(0)};
    friend P3Class operator+(const P3Class& a, const P3Class& b);
    friend P3Class operator*(const P3Class& a, const P3Class& b);  // truncates above h^3
    friend bool operator==(const P3Class& a, const P3Class& b) { return a.c == b.c; }
    std::string str() const;
};

/// The unique ring-homomorphism candidate sending eps_1 to d*h: it must send
/// eps_i to (d^i / i!) h^i for i <= 3 and to 0 for i >= 4. Defined exactly
/// when d, d^2/2 and d^3/6 are integers; otherwise reports the first failing
/// integrality constraint.
struct PullbackResult {
    bool admissible = false;
    int obstruction_index = 0;     // 2 or 3 when !admissible
    Rat obstruction_value;         // the non-integer d^i / i!
    std::array<Int, 4> image;      // image[i] = coefficient of h^i for eps_i (i = 0..3)
    P3Class eps_image(unsigned long i) const;
};

PullbackResult p3_pullback(const Int& d);

/// True iff p3_pullback(d) succeeds; equivalent to 6 | d.
bool admissible_degree(const Int& d);

}  // namespace kpm
