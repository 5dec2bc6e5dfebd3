#include "gell/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace gell {

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_row(IntMatrix& m, int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
}

void add_col(IntMatrix& m, int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
}

void negate_row(IntMatrix& m, int i) {
    for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

// Smallest nonzero |entry| of d[t.., t..], ties by lowest (row, col).
bool find_pivot(const IntMatrix& d, int t, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int i = t; i < d.rows; ++i)
        for (int j = t; j < d.cols; ++j) {
            const Int& v = d.at(i, j);
            if (v == 0) continue;
            Int av = abs(v);
            if (!found || av < best) {
                found = true;
                best = av;
                pr = i;
                pc = j;
            }
        }
    return found;
}

bool row_col_clear(const IntMatrix& d, int t) {
    for (int i = t + 1; i < d.rows; ++i)
        if (d.at(i, t) != 0) return false;
    for (int j = t + 1; j < d.cols; ++j)
        if (d.at(t, j) != 0) return false;
    return true;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    const int m = a.rows, n = a.cols;
    SmithResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = r.d;
    const int nmin = std::min(m, n);

    for (int t = 0; t < nmin; ++t) {
        for (;;) {
            int pr, pc;
            if (!find_pivot(d, t, pr, pc)) {
                // submatrix is zero; remaining diagonal stays 0
                t = nmin;
                break;
            }
            swap_rows(d, t, pr);
            swap_rows(r.u, t, pr);
            swap_cols(d, t, pc);
            swap_cols(r.v, t, pc);

            for (int i = t + 1; i < m; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
                add_row(d, i, t, -q);
                add_row(r.u, i, t, -q);
            }
            for (int j = t + 1; j < n; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q;
                mpz_tdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
                add_col(d, j, t, -q);
                add_col(r.v, j, t, -q);
            }
            if (!row_col_clear(d, t)) continue;

            // pivot is lone; enforce divisibility of the trailing block
            bool divides_all = true;
            for (int i = t + 1; i < m && divides_all; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        add_row(d, t, i, 1);
                        add_row(r.u, t, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (t >= nmin) break;
        if (d.at(t, t) < 0) {
            negate_row(d, t);
            negate_row(r.u, t);
        }
    }
    return r;
}

std::vector<Int> invariant_factors(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    const int nmin = std::min(a.rows, a.cols);
    std::vector<Int> f(nmin);
    for (int i = 0; i < nmin; ++i) f[i] = s.d.at(i, i);
    return f;
}

std::optional<IntMatrix> solve_integral(const IntMatrix& b, const IntMatrix& c) {
    if (!b.square()) throw std::invalid_argument("solve_integral needs a square left-hand side");
    if (b.rows != c.rows) throw std::invalid_argument("solve_integral dimension mismatch");
    const int n = b.rows;
    SmithResult s = smith_normal_form(b);
    for (int i = 0; i < n; ++i)
        if (s.d.at(i, i) == 0) throw std::invalid_argument("solve_integral needs det != 0");

    // B = U^-1 D V^-1, so X = V D^-1 (U C); integral iff D | (U C) rowwise.
    IntMatrix w = s.u * c;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c.cols; ++j) {
            if (w.at(i, j) % s.d.at(i, i) != 0) return std::nullopt;
            mpz_divexact(w.at(i, j).get_mpz_t(), w.at(i, j).get_mpz_t(), s.d.at(i, i).get_mpz_t());
        }
    return s.v * w;
}

}  // namespace gell
