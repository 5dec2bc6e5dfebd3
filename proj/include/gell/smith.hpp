#ifndef GELL_SMITH_HPP
#define GELL_SMITH_HPP

#include <optional>
#include <vector>

#include "gell/matrix.hpp"

namespace gell {

// U * A * V = D with U, V unimodular and D diagonal, nonnegative, with
// d1 | d2 | ... Pivots are chosen by smallest nonzero absolute value,
// ties broken by lowest (row, col).
struct SmithResult {
    IntMatrix u;  // rows x rows
    IntMatrix d;  // rows x cols
    IntMatrix v;  // cols x cols
};

SmithResult smith_normal_form(const IntMatrix& a);

// Diagonal of the Smith form, length min(rows, cols).
std::vector<Int> invariant_factors(const IntMatrix& a);

// Integer solution X of B * X = C when one exists (B square, det != 0).
std::optional<IntMatrix> solve_integral(const IntMatrix& b, const IntMatrix& c);

}  // namespace gell

#endif
