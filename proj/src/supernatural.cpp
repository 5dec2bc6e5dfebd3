#include "gell/supernatural.hpp"

#include <stdexcept>

namespace gell {

void SupernaturalNumber::multiply_prime(const Int& p, long exponent) {
    if (exponent <= 0) return;
    if (infinite.count(p)) return;
    finite[p] += exponent;
}

void SupernaturalNumber::multiply(const SupernaturalNumber& other) {
    for (const Int& p : other.infinite) make_infinite(p);
    for (const auto& [p, e] : other.finite) multiply_prime(p, e);
}

void SupernaturalNumber::make_infinite(const Int& p) {
    infinite.insert(p);
    finite.erase(p);
}

std::string SupernaturalNumber::str() const {
    if (is_one()) return "1";
    // merge both maps in prime order
    std::string out;
    auto append = [&out](const Int& p, long e, bool inf) {
        if (!out.empty()) out += "*";
        out += p.get_str();
        if (inf)
            out += "^inf";
        else if (e > 1)
            out += "^" + std::to_string(e);
    };
    auto fit = finite.begin();
    auto iit = infinite.begin();
    while (fit != finite.end() || iit != infinite.end()) {
        if (iit == infinite.end() || (fit != finite.end() && fit->first < *iit)) {
            append(fit->first, fit->second, false);
            ++fit;
        } else {
            append(*iit, 0, true);
            ++iit;
        }
    }
    return out;
}

std::map<Int, long> factorize(const Int& n) {
    if (n < 1) throw std::invalid_argument("factorize needs n >= 1");
    std::map<Int, long> f;
    Int m = n;
    Int p = 2;
    while (p * p <= m) {
        while (m % p == 0) {
            ++f[p];
            m /= p;
        }
        p = (p == 2) ? Int(3) : Int(p + 2);
    }
    if (m > 1) ++f[m];
    return f;
}

SupernaturalNumber steinitz(const std::vector<Int>& indices, const std::vector<Int>& periodic_tail) {
    SupernaturalNumber s;
    for (const Int& q : indices) {
        if (q < 1) throw std::invalid_argument("steinitz indices must be >= 1");
        for (const auto& [p, e] : factorize(q)) s.multiply_prime(p, e);
    }
    for (const Int& q : periodic_tail) {
        if (q < 1) throw std::invalid_argument("steinitz tail entries must be >= 1");
        for (const auto& [p, e] : factorize(q)) s.make_infinite(p);
    }
    return s;
}

}  // namespace gell
