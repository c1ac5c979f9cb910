#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace kpm {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "p/q" or a bare integer; result in lowest terms with q > 0.
Rat rat_parse(const std::string& s);

std::string rat_str(const Rat& q);
std::string int_str(const Int& n);

// Crude size measure (decimal digits of numerator + denominator), used by
// the elimination pivot heuristic.
std::size_t rat_height(const Rat& q);

Int binomial(unsigned long n, unsigned long k);

}  // namespace kpm
