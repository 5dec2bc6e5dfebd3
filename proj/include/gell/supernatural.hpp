#ifndef GELL_SUPERNATURAL_HPP
#define GELL_SUPERNATURAL_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gell/rational.hpp"

namespace gell {

// Formal product of primes with exponents in N u {inf}; the Steinitz
// invariant of an index tower. Finite exponents are stored explicitly,
// infinite ones as a prime set.
struct SupernaturalNumber {
    std::map<Int, long> finite;  // prime -> exponent >= 1, primes not in `infinite`
    std::set<Int> infinite;

    static SupernaturalNumber one() { return {}; }
    bool is_one() const { return finite.empty() && infinite.empty(); }

    void multiply_prime(const Int& p, long exponent);
    void multiply(const SupernaturalNumber& other);
    void make_infinite(const Int& p);

    std::string str() const;  // "1", "2^3*5", "2^inf*3"

    friend bool operator==(const SupernaturalNumber&, const SupernaturalNumber&) = default;
};

// Prime factorization by trial division; n >= 1.
std::map<Int, long> factorize(const Int& n);

// Formal product of the factorizations of the indices; primes dividing any
// entry of the periodic tail get exponent inf.
SupernaturalNumber steinitz(const std::vector<Int>& indices,
                            const std::vector<Int>& periodic_tail = {});

}  // namespace gell

#endif
