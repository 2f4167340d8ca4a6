#pragma once

#include <gmpxx.h>
#include <string>

namespace cactuslab {

// All coordinates in this project are exact rationals.  GMP keeps them
// canonical (lowest terms, positive denominator) which makes equality,
// serialization and hashing trivial.
using Rat = mpq_class;
using Int = mpz_class;

// canonical text form: "p/q" in lowest terms, or bare "p" when q == 1
std::string rat_str(const Rat& r);

// strict mode accepts only the canonical form above and round-trips
// byte for byte; lenient mode takes any "p/q" or "p" and canonicalizes.
// Throws std::invalid_argument on malformed text or zero denominator.
Rat parse_rat(const std::string& text, bool strict = false);

Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

// r - floor(r), the representative of r mod 1 in [0,1)
Rat rat_mod1(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace cactuslab
