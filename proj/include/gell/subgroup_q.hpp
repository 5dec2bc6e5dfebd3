#ifndef GELL_SUBGROUP_Q_HPP
#define GELL_SUBGROUP_Q_HPP

#include <vector>

#include "gell/rational.hpp"

namespace gell {

// A finitely generated subgroup of Q is cyclic; normal form is the unique
// nonnegative generator (0 encodes the trivial group).
struct SubgroupOfQ {
    Rat generator = 0;

    bool trivial() const { return generator == 0; }
    bool contains(const Rat& x) const;

    friend bool operator==(const SubgroupOfQ&, const SubgroupOfQ&) = default;
};

// <gens> = gZ with g = gcd of numerators / lcm of denominators.
SubgroupOfQ subgroup_generator(const std::vector<Rat>& gens);

// Subgroup generated by the union.
SubgroupOfQ join(const SubgroupOfQ& a, const SubgroupOfQ& b);

}  // namespace gell

#endif
