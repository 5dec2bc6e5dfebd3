#include "gell/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gell {

IntMatrix::IntMatrix(int r, int c, std::vector<Int> entries) : rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != static_cast<size_t>(r) * c)
        throw std::invalid_argument("matrix entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const std::vector<Int>& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : a)
        if (v != 0) return false;
    return true;
}

bool IntMatrix::is_identity() const {
    if (!square()) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix sum dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] + b.a[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::invalid_argument("matrix difference dimension mismatch");
    IntMatrix c(a.rows, a.cols);
    for (size_t i = 0; i < a.a.size(); ++i) c.a[i] = a.a[i] - b.a[i];
    return c;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

IntMatrix submatrix(const IntMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    IntMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = a.at(rows[i], cols[j]);
    return s;
}

Int determinant(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = a.rows;
    if (n == 0) return 1;
    IntMatrix m = a;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                // exact by the Bareiss identity
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = t;
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

RatMatrix::RatMatrix(int r, int c, std::vector<Rat> entries) : rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != static_cast<size_t>(r) * c)
        throw std::invalid_argument("matrix entry count does not match dimensions");
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols != b.rows) throw std::invalid_argument("matrix product dimension mismatch");
    RatMatrix c(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

RatMatrix transpose(const RatMatrix& a) {
    RatMatrix t(a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) t.at(j, i) = a.at(i, j);
    return t;
}

RatMatrix to_rational(const IntMatrix& a) {
    RatMatrix r(a.rows, a.cols);
    for (size_t i = 0; i < a.a.size(); ++i) r.a[i] = Rat(a.a[i]);
    return r;
}

RatMatrix submatrix(const RatMatrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    RatMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            s.at(static_cast<int>(i), static_cast<int>(j)) = a.at(rows[i], cols[j]);
    return s;
}

Rat determinant(const RatMatrix& a) {
    if (!a.square()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = a.rows;
    if (n == 0) return 1;
    RatMatrix m = a;
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
            det = -det;
        }
        det *= m.at(k, k);
        Rat inv = 1 / m.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0) continue;
            Rat f = m.at(i, k) * inv;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& a) {
    if (!a.square()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = a.rows;
    RatMatrix m = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (m.at(i, k) != 0) { piv = i; break; }
        if (piv < 0) throw std::invalid_argument("inverse of singular matrix");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(k, j), m.at(piv, j));
                std::swap(inv.at(k, j), inv.at(piv, j));
            }
        Rat d = 1 / m.at(k, k);
        for (int j = 0; j < n; ++j) {
            m.at(k, j) *= d;
            inv.at(k, j) *= d;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || m.at(i, k) == 0) continue;
            Rat f = m.at(i, k);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

RatMatrix inverse(const IntMatrix& a) { return inverse(to_rational(a)); }

}  // namespace gell
