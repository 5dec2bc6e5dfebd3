#ifndef GELL_RATIONAL_HPP
#define GELL_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace gell {

// Exact arithmetic everywhere: mpz for integers, mpq (always canonical,
// denominator > 0) for rationals.
using Int = mpz_class;
using Rat = mpq_class;

// Reduced fraction num/den; den must be nonzero.
Rat make_rat(const Int& num, const Int& den);

// Accepts "a" or "a/b" in base 10.
Rat rat_from_string(const std::string& s);
Int int_from_string(const std::string& s);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);  // "a" when integral, "a/b" otherwise

// Representative of v mod 2 in [0, 2).
Rat rat_mod2(const Rat& v);

int sign_of(const Int& v);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

}  // namespace gell

#endif
