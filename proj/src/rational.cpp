#include "gell/rational.hpp"

#include <stdexcept>

namespace gell {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat rat_from_string(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("invalid rational literal: '" + s + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

Int int_from_string(const std::string& s) {
    mpz_class v;
    if (v.set_str(s, 10) != 0)
        throw std::invalid_argument("invalid integer literal: '" + s + "'");
    return v;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_str();
}

Rat rat_mod2(const Rat& v) {
    // v - 2*floor(v/2)
    Rat half = v / 2;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
    Rat r = v - Rat(2) * Rat(fl);
    r.canonicalize();
    return r;
}

int sign_of(const Int& v) { return sgn(v); }

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace gell
