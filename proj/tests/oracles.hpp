// Test-only oracles, independent of the library's computation paths.
#ifndef GELL_TESTS_ORACLES_HPP
#define GELL_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "gell/matrix.hpp"

namespace gell::oracles {

// Determinant by cofactor expansion along the first row.
inline Int det_cofactor(const IntMatrix& a) {
    const int n = a.rows;
    if (n == 0) return 1;
    if (n == 1) return a.at(0, 0);
    Int sum = 0;
    for (int j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        Int term = a.at(0, j) * det_cofactor(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

inline Rat det_cofactor(const RatMatrix& a) {
    const int n = a.rows;
    if (n == 0) return 1;
    if (n == 1) return a.at(0, 0);
    Rat sum = 0;
    for (int j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        RatMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        Rat term = a.at(0, j) * det_cofactor(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

// Invariant factors through gcds of k x k minors: d_k = g_k / g_{k-1} with
// g_k the gcd of all k x k minors (classical characterization, no row
// reduction involved).
inline std::vector<Int> invariant_factors_minor_gcd(const IntMatrix& a) {
    const int n = std::min(a.rows, a.cols);
    std::vector<Int> g(n + 1);
    g[0] = 1;
    std::vector<int> rows_idx, cols_idx;
    for (int k = 1; k <= n; ++k) {
        Int gk = 0;
        // enumerate k-subsets of rows and cols
        std::vector<int> rs(k), cs(k);
        for (int i = 0; i < k; ++i) rs[i] = i;
        for (;;) {
            for (int i = 0; i < k; ++i) cs[i] = i;
            for (;;) {
                gk = gcd(gk, det_cofactor(submatrix(a, rs, cs)));
                int i = k - 1;
                while (i >= 0 && cs[i] == a.cols - k + i) --i;
                if (i < 0) break;
                ++cs[i];
                for (int j = i + 1; j < k; ++j) cs[j] = cs[j - 1] + 1;
            }
            int i = k - 1;
            while (i >= 0 && rs[i] == a.rows - k + i) --i;
            if (i < 0) break;
            ++rs[i];
            for (int j = i + 1; j < k; ++j) rs[j] = rs[j - 1] + 1;
        }
        g[k] = abs(gk);
    }
    std::vector<Int> d(n);
    for (int k = 1; k <= n; ++k) {
        if (g[k] == 0) {
            d[k - 1] = 0;  // rank deficiency: all further factors are 0
        } else {
            d[k - 1] = g[k] / g[k - 1];
        }
    }
    return d;
}

// Smallest positive value of sum n_i g_i over |n_i| <= bound; 0 if none.
inline Rat min_positive_combination(const std::vector<Rat>& gens, int bound) {
    std::vector<long> coeff(gens.size(), -bound);
    Rat best = 0;
    for (;;) {
        Rat v = 0;
        for (size_t i = 0; i < gens.size(); ++i) v += Rat(coeff[i]) * gens[i];
        if (v > 0 && (best == 0 || v < best)) best = v;
        size_t i = 0;
        while (i < gens.size() && coeff[i] == bound) coeff[i++] = -bound;
        if (i == gens.size()) break;
        ++coeff[i];
    }
    return best;
}

// Deterministic small random matrices for property tests.
inline IntMatrix random_int_matrix(std::mt19937_64& rng, int n, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = dist(rng);
    return m;
}

inline RatMatrix random_skew_matrix(std::mt19937_64& rng, int n, int num_bound = 6,
                                    int den_bound = 7) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, den_bound);
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Rat v = make_rat(num(rng), den(rng));
            m.at(i, j) = v;
            m.at(j, i) = -v;
        }
    return m;
}

// Random unimodular matrix: product of elementary row additions and swaps.
inline IntMatrix random_unimodular(std::mt19937_64& rng, int n, int ops = 12) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    IntMatrix m = IntMatrix::identity(n);
    for (int t = 0; t < ops; ++t) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Int f = coef(rng);
        for (int c = 0; c < n; ++c) m.at(i, c) += f * m.at(j, c);
    }
    return m;
}

// Random nonsingular step matrix with |det| <= bound.
inline IntMatrix random_step(std::mt19937_64& rng, int n, int det_bound) {
    for (;;) {
        IntMatrix m = random_int_matrix(rng, n, -2, 2);
        Int d = det_cofactor(m);
        if (d != 0 && abs(d) <= det_bound) return m;
    }
}

}  // namespace gell::oracles

#endif
