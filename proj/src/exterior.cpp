#include "gell/exterior.hpp"

#include <bit>
#include <stdexcept>

namespace gell {

long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

SubsetMask mask_of(const std::vector<int>& elements) {
    SubsetMask m = 0;
    for (int e : elements) {
        if (e < 1 || e > 32) throw std::invalid_argument("subset element out of range");
        m |= SubsetMask{1} << (e - 1);
    }
    return m;
}

std::vector<int> elements_of(SubsetMask m) {
    std::vector<int> v;
    for (int i = 0; m != 0; ++i, m >>= 1)
        if (m & 1) v.push_back(i + 1);
    return v;
}

int subset_size(SubsetMask m) { return std::popcount(m); }

std::string subset_to_string(SubsetMask m) {
    std::string s = "{";
    bool first = true;
    for (int e : elements_of(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

std::vector<SubsetMask> lex_subsets(int n, int k) {
    std::vector<SubsetMask> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    for (;;) {
        out.push_back(mask_of(c));
        // next combination in lex order
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

std::vector<SubsetMask> subsets_of_parity(int n, int parity) {
    std::vector<SubsetMask> out;
    for (int k = parity & 1; k <= n; k += 2)
        for (SubsetMask s : lex_subsets(n, k)) out.push_back(s);
    return out;
}

std::vector<SubsetMask> subsets_by_degree(int n) {
    std::vector<SubsetMask> out;
    for (int k = 0; k <= n; ++k)
        for (SubsetMask s : lex_subsets(n, k)) out.push_back(s);
    return out;
}

bool subset_order_less(SubsetMask a, SubsetMask b) {
    int ka = subset_size(a), kb = subset_size(b);
    if (ka != kb) return ka < kb;
    // lex on ascending element lists
    while (a != 0 && b != 0) {
        int ea = std::countr_zero(a), eb = std::countr_zero(b);
        if (ea != eb) return ea < eb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

int lex_rank(int n, SubsetMask s) {
    // rank via the combinatorial number system
    int k = subset_size(s);
    if (k == 0) return 0;
    long rank = 0;
    int prev = 0;
    int seen = 0;
    for (int e : elements_of(s)) {
        ++seen;
        for (int c = prev + 1; c < e; ++c) rank += binomial(n - c, k - seen);
        prev = e;
    }
    return static_cast<int>(rank);
}

int wedge_sign(SubsetMask i, SubsetMask j) {
    if ((i & j) != 0) throw std::invalid_argument("wedge_sign needs disjoint subsets");
    int inversions = 0;
    for (int a : elements_of(i)) {
        SubsetMask below = j & ((SubsetMask{1} << (a - 1)) - 1);
        inversions += std::popcount(below);
    }
    return inversions % 2 == 0 ? 1 : -1;
}

IntMatrix exterior_power(const IntMatrix& a, int k) {
    if (!a.square()) throw std::invalid_argument("exterior_power of non-square matrix");
    const int n = a.rows;
    if (k < 0 || k > n) throw std::invalid_argument("exterior power degree out of range");
    std::vector<SubsetMask> basis = lex_subsets(n, k);
    const int sz = static_cast<int>(basis.size());
    IntMatrix out(sz, sz);
    for (int r = 0; r < sz; ++r) {
        std::vector<int> ri = elements_of(basis[r]);
        for (int& e : ri) --e;  // to 0-based row indices
        for (int c = 0; c < sz; ++c) {
            std::vector<int> ci = elements_of(basis[c]);
            for (int& e : ci) --e;
            out.at(r, c) = determinant(submatrix(a, ri, ci));
        }
    }
    return out;
}

}  // namespace gell
