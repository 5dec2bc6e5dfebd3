#include "gell/twist.hpp"

#include <stdexcept>

namespace gell {

SkewForm::SkewForm(RatMatrix theta) : theta_(std::move(theta)) {
    if (!theta_.square()) throw std::invalid_argument("skew form must be square");
    for (int i = 0; i < theta_.rows; ++i) {
        if (theta_.at(i, i) != 0) throw std::invalid_argument("skew form must have zero diagonal");
        for (int j = i + 1; j < theta_.cols; ++j)
            if (theta_.at(i, j) != -theta_.at(j, i))
                throw std::invalid_argument("skew form must satisfy Theta^T = -Theta");
    }
}

Twist Twist::numeric(SkewForm f) {
    Twist t;
    t.mode = Mode::numeric;
    t.form = std::move(f);
    return t;
}

Twist Twist::symbolic() {
    Twist t;
    t.mode = Mode::symbolic;
    return t;
}

namespace {

Rat bilinear(const SkewForm& theta, const std::vector<Int>& m, const std::vector<Int>& n) {
    const int d = theta.dimension();
    if (static_cast<int>(m.size()) != d || static_cast<int>(n.size()) != d)
        throw std::invalid_argument("cocycle vector length mismatch");
    Rat s = 0;
    for (int i = 0; i < d; ++i) {
        if (m[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (n[j] == 0) continue;
            s += Rat(m[i]) * theta.entry(i, j) * Rat(n[j]);
        }
    }
    return s;
}

std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

}  // namespace

PhaseExponent cocycle(const SkewForm& theta, const std::vector<Int>& m, const std::vector<Int>& n) {
    return PhaseExponent{rat_mod2(bilinear(theta, m, n))};
}

bool cocycle_identity_check(const SkewForm& theta, const std::vector<Int>& m,
                            const std::vector<Int>& n, const std::vector<Int>& k) {
    Rat lhs = bilinear(theta, m, n) + bilinear(theta, add(m, n), k);
    Rat rhs = bilinear(theta, m, add(n, k)) + bilinear(theta, n, k);
    if (rat_mod2(lhs) != rat_mod2(rhs)) return false;
    const std::vector<Int> zero(m.size(), Int(0));
    return cocycle(theta, m, zero).value == 0 && cocycle(theta, zero, n).value == 0;
}

std::map<SubsetMask, Rat, SubsetOrder> pfaffian_profile(const SkewForm& theta, int max_dimension) {
    const int d = theta.dimension();
    if (d > max_dimension)
        throw std::invalid_argument("pfaffian_profile dimension beyond configured bound");
    std::map<SubsetMask, Rat, SubsetOrder> profile;
    for (int k = 0; k <= d; k += 2)
        for (SubsetMask s : lex_subsets(d, k)) profile[s] = pfaffian_minor(theta.matrix(), s);
    return profile;
}

SkewForm restricted_form(const SkewForm& theta, const IntMatrix& b) {
    if (!b.square() || b.rows != theta.dimension())
        throw std::invalid_argument("restriction basis has wrong shape");
    if (determinant(b) == 0) throw std::invalid_argument("restriction basis is singular");
    RatMatrix bq = to_rational(b);
    return SkewForm(transpose(bq) * theta.matrix() * bq);
}

}  // namespace gell
