#include "gell/pfaffian.hpp"

#include <map>
#include <stdexcept>

namespace gell {

namespace {

void check_skew(const RatMatrix& s) {
    if (!s.square()) throw std::invalid_argument("pfaffian of non-square matrix");
    for (int i = 0; i < s.rows; ++i)
        for (int j = i; j < s.cols; ++j)
            if (s.at(i, j) != -s.at(j, i))
                throw std::invalid_argument("symmetry violation: matrix is not skew-symmetric");
}

// mask holds the live 0-based indices
Rat pf_rec(const RatMatrix& s, SubsetMask mask, std::map<SubsetMask, Rat>& memo) {
    if (mask == 0) return 1;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    std::vector<int> idx;
    for (int i = 0; i < s.rows; ++i)
        if (mask & (SubsetMask{1} << i)) idx.push_back(i);

    Rat sum = 0;
    const int i0 = idx[0];
    int sign = 1;
    for (size_t t = 1; t < idx.size(); ++t) {
        const Rat& entry = s.at(i0, idx[t]);
        if (entry != 0) {
            SubsetMask rest = mask & ~(SubsetMask{1} << i0) & ~(SubsetMask{1} << idx[t]);
            sum += sign * entry * pf_rec(s, rest, memo);
        }
        sign = -sign;
    }
    memo.emplace(mask, sum);
    return sum;
}

}  // namespace

Rat pfaffian(const RatMatrix& s) {
    check_skew(s);
    if (s.rows % 2 != 0) return 0;
    if (s.rows == 0) return 1;
    if (s.rows > 32) throw std::invalid_argument("pfaffian dimension beyond supported bound");
    std::map<SubsetMask, Rat> memo;
    SubsetMask all = s.rows == 32 ? ~SubsetMask{0} : (SubsetMask{1} << s.rows) - 1;
    return pf_rec(s, all, memo);
}

Rat pfaffian(const IntMatrix& s) { return pfaffian(to_rational(s)); }

Rat pfaffian_minor(const RatMatrix& s, SubsetMask subset) {
    check_skew(s);
    if (subset_size(subset) % 2 != 0)
        throw std::invalid_argument("pfaffian_minor needs an even-cardinality subset");
    std::vector<int> idx = elements_of(subset);
    for (int& e : idx) {
        if (e > s.rows) throw std::invalid_argument("pfaffian_minor subset out of range");
        --e;
    }
    return pfaffian(submatrix(s, idx, idx));
}

}  // namespace gell
