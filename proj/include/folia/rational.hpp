#pragma once

#include <gmpxx.h>
#include <string>

namespace folia {

// Exact rational coefficients. mpq_class keeps values canonicalized
// (reduced, positive denominator) as long as construction goes through
// the helpers below.
using Rat = mpq_class;

// Parses "p", "-p" or "p/q". Throws ParseError on malformed input.
Rat rat_from_string(const std::string& s);

// Canonical "p/q" with q > 0 and gcd(p,q) = 1; integers render without "/1".
std::string rat_to_string(const Rat& r);

} // namespace folia
