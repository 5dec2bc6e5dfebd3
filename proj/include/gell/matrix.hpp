#ifndef GELL_MATRIX_HPP
#define GELL_MATRIX_HPP

#include <vector>

#include "gell/rational.hpp"

namespace gell {

// Dense row-major integer matrix with arbitrary-precision entries.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    IntMatrix(int r, int c, std::vector<Int> entries);

    static IntMatrix identity(int n);
    static IntMatrix diagonal(const std::vector<Int>& d);

    Int& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Int& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool square() const { return rows == cols; }
    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

// Submatrix on given row/column index lists (0-based, in the given order).
IntMatrix submatrix(const IntMatrix& a, const std::vector<int>& rows,
                    const std::vector<int>& cols);

// Exact determinant by fraction-free (Bareiss) elimination. Square input only.
Int determinant(const IntMatrix& a);

// Dense rational matrix, same layout.
struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    RatMatrix(int r, int c, std::vector<Rat> entries);

    static RatMatrix identity(int n);

    Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool square() const { return rows == cols; }

    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix transpose(const RatMatrix& a);
RatMatrix to_rational(const IntMatrix& a);
RatMatrix submatrix(const RatMatrix& a, const std::vector<int>& rows,
                    const std::vector<int>& cols);

// Exact determinant by Gaussian elimination over Q.
Rat determinant(const RatMatrix& a);

// Exact inverse; throws on singular input.
RatMatrix inverse(const RatMatrix& a);
RatMatrix inverse(const IntMatrix& a);

}  // namespace gell

#endif
