#include "gell/subgroup_q.hpp"

namespace gell {

bool SubgroupOfQ::contains(const Rat& x) const {
    if (x == 0) return true;
    if (generator == 0) return false;
    Rat q = x / generator;
    return q.get_den() == 1;
}

SubgroupOfQ subgroup_generator(const std::vector<Rat>& gens) {
    Int num = 0, den = 1;
    for (const Rat& g : gens) {
        if (g == 0) continue;
        num = gcd(num, abs(g.get_num()));
        den = lcm(den, g.get_den());
    }
    if (num == 0) return {};
    return {make_rat(num, den)};
}

SubgroupOfQ join(const SubgroupOfQ& a, const SubgroupOfQ& b) {
    return subgroup_generator({a.generator, b.generator});
}

}  // namespace gell
