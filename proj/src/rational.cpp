#include "kpm/rational.hpp"

#include <cctype>

#include "kpm/errors.hpp"

namespace kpm {

Rat rat_parse(const std::string& s) {
    std::string trimmed;
    trimmed.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
    }
    if (trimmed.empty()) throw MalformedInput("empty rational literal");
    mpq_t q;
    mpq_init(q);
    if (mpq_set_str(q, trimmed.c_str(), 10) != 0) {
        mpq_clear(q);
        throw MalformedInput("bad rational literal: '" + s + "'");
    }
    if (mpz_sgn(mpq_denref(q)) == 0) {
        mpq_clear(q);
        throw MalformedInput("zero denominator in '" + s + "'");
    }
    mpq_canonicalize(q);
    Rat out(q);
    mpq_clear(q);
    return out;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::string int_str(const Int& n) { return n.get_str(); }

std::size_t rat_height(const Rat& q) {
    return mpz_sizeinbase(q.get_num().get_mpz_t(), 10) +
           mpz_sizeinbase(q.get_den().get_mpz_t(), 10);
}

Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace kpm
