#include "kpm/factor.hpp"

#include <algorithm>
#include <map>

#include "kpm/errors.hpp"

namespace kpm {

namespace {

constexpr unsigned long kTrialLimit = 1000000UL;
constexpr std::size_t kTupleGuard = 2000000;

void require_rational(const Poly& f) {
    for (const auto& c : f.coeffs())
        if (!c.is_rational()) throw MalformedInput("factorization only over the rationals");
}

// Clears denominators and content: returns a primitive integer polynomial
// proportional to f (positive leading coefficient).
std::vector<Int> primitive_integer(const Poly& f) {
    Int den(1);
    for (const auto& c : f.coeffs()) {
        Int d = c.rat().get_den();
        den = den / gcd(den, d) * d;  // lcm
    }
    std::vector<Int> out;
    Int content(0);
    for (const auto& c : f.coeffs()) {
        Rat scaled = c.rat() * Rat(den);
        out.push_back(scaled.get_num());
        content = gcd(content, out.back());
    }
    if (sgn(content) == 0) content = 1;
    if (sgn(out.back()) < 0) content = -content;
    for (auto& v : out) v /= content;
    return out;
}

Int eval_int(const std::vector<Int>& g, const Int& x) {
    Int acc(0);
    for (auto it = g.rbegin(); it != g.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// All divisors of |v| (v != 0), both signs, deterministic order.
std::vector<Int> signed_divisors(const Int& v) {
    Int n = abs(v);
    std::map<Int, int> primes;
    Int m = n;
    for (unsigned long p = 2; Int(p) * Int(p) <= m && p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++primes[Int(p)];
            m /= p;
        }
    }
    if (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 32) == 0)
            throw MalformedInput("factorization guard: composite cofactor too large");
        ++primes[m];
    }
    std::vector<Int> divs = {Int(1)};
    for (const auto& [p, e] : primes) {
        std::vector<Int> next;
        Int pk(1);
        for (int k = 0; k <= e; ++k) {
            for (const auto& d : divs) next.push_back(d * pk);
            pk *= p;
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end());
    std::vector<Int> out;
    out.reserve(2 * divs.size());
    for (const auto& d : divs) {
        out.push_back(d);
        out.push_back(-d);
    }
    return out;
}

Poly poly_from_int(const std::vector<Int>& g) {
    std::vector<Scalar> c;
    c.reserve(g.size());
    for (const auto& v : g) c.emplace_back(Rat(v));
    return Poly::from_coeffs(std::move(c));
}

// Lagrange interpolation through (x_i, y_i).
Poly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    Poly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis(Scalar(1));
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis *= Poly::from_coeffs({Scalar(Rat(-xs[j])), Scalar(1)});
            denom *= Rat(xs[i] - xs[j]);
        }
        acc += Scalar(Rat(ys[i]) / denom) * basis;
    }
    return acc;
}

bool integer_coeffs(const Poly& p) {
    for (const auto& c : p.coeffs())
        if (c.rat().get_den() != 1) return false;
    return true;
}

// One irreducible factor of the squarefree, rational-root-free g (monic,
// rational coefficients), or the zero polynomial if g is irreducible.
Poly kronecker_split(const Poly& g) {
    const int n = g.degree();
    std::vector<Int> gi = primitive_integer(g);
    for (int m = 2; 2 * m <= n; ++m) {
        // Evaluation points 0, 1, -1, 2, -2, ...
        std::vector<Int> xs;
        for (int k = 0; static_cast<int>(xs.size()) <= m; ++k) {
            xs.push_back(Int(k == 0 ? 0 : (k % 2 ? (k + 1) / 2 : -(k / 2))));
        }
        std::vector<std::vector<Int>> choices;
        std::size_t total = 1;
        for (const auto& x : xs) {
            choices.push_back(signed_divisors(eval_int(gi, x)));
            total *= choices.back().size();
            if (total > kTupleGuard)
                throw MalformedInput("factorization guard: Kronecker search too large");
        }
        std::vector<std::size_t> idx(xs.size(), 0);
        while (true) {
            std::vector<Int> ys(xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = choices[i][idx[i]];
            Poly h = interpolate(xs, ys);
            if (h.degree() == m && sgn(h.lead().rat()) > 0 && integer_coeffs(h) &&
                Poly::divides(h, g)) {
                return h.monic();
            }
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    }
    return Poly();
}

// Factors a monic squarefree polynomial (degree >= 1) into monic irreducibles.
std::vector<Poly> factor_squarefree(Poly g) {
    std::vector<Poly> out;
    // Rational roots first.
    while (g.degree() >= 1) {
        std::vector<Int> gi = primitive_integer(g);
        bool found = false;
        if (sgn(gi.front()) == 0) {
            out.push_back(Poly::variable());
            g = Poly::exact_div(g, Poly::variable());
            continue;
        }
        for (const auto& p : signed_divisors(gi.front())) {
            for (const auto& q : signed_divisors(gi.back())) {
                if (sgn(q) <= 0) continue;
                if (gcd(abs(p), q) != 1) continue;
                Rat root(p, q);
                root.canonicalize();
                if (g.eval(Scalar(root)).is_zero()) {
                    Poly lin = Poly::from_coeffs({Scalar(-root), Scalar(1)});
                    out.push_back(lin);
                    g = Poly::exact_div(g, lin);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) break;
    }
    // Kronecker on what remains.
    while (g.degree() >= 2) {
        Poly h = kronecker_split(g);
        if (h.is_zero()) break;  // irreducible
        out.push_back(h);
        g = Poly::exact_div(g, h);
    }
    if (g.degree() >= 1) out.push_back(g);
    return out;
}

}  // namespace

RationalFactorization factor_rational(const Poly& f) {
    require_rational(f);
    RationalFactorization out;
    if (f.is_zero()) throw MalformedInput("factorization of the zero polynomial");
    out.unit = f.lead().rat();
    Poly g = f.monic();
    if (g.degree() == 0) return out;

    // Yun's squarefree decomposition: g = prod a_i^i.
    std::vector<std::pair<Poly, int>> squarefree;
    Poly d = Poly::gcd(g, g.derivative());
    if (d.degree() == 0) {
        squarefree.emplace_back(g, 1);
    } else {
        Poly b = Poly::exact_div(g, d);
        Poly c = Poly::exact_div(g.derivative(), d);
        Poly diff = c - b.derivative();
        int i = 1;
        while (b.degree() >= 1) {
            Poly a = Poly::gcd(b, diff);
            if (a.degree() >= 1) squarefree.emplace_back(a, i);
            b = Poly::exact_div(b, a);
            c = Poly::exact_div(diff, a);
            diff = c - b.derivative();
            ++i;
        }
    }

    for (const auto& [part, mult] : squarefree) {
        for (const auto& irred : factor_squarefree(part)) out.factors.emplace_back(irred, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& x, const auto& y) {
                  if (x.first.degree() != y.first.degree())
                      return x.first.degree() < y.first.degree();
                  for (int i = x.first.degree(); i >= 0; --i) {
                      const Rat& a = x.first.at(i).rat();
                      const Rat& b = y.first.at(i).rat();
                      if (a != b) return a < b;
                  }
                  return x.second < y.second;
              });
    return out;
}

bool irreducible_rational(const Poly& f) {
    require_rational(f);
    if (f.degree() < 1) return false;
    auto fac = factor_rational(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<std::pair<Rat, int>> rational_roots(const Poly& f) {
    std::vector<std::pair<Rat, int>> out;
    for (const auto& [p, mult] : factor_rational(f).factors) {
        if (p.degree() == 1) out.emplace_back((-p.at(0)).rat(), mult);
    }
    return out;
}

}  // namespace kpm
