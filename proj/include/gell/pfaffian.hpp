#ifndef GELL_PFAFFIAN_HPP
#define GELL_PFAFFIAN_HPP

#include <vector>

#include "gell/exterior.hpp"
#include "gell/matrix.hpp"

namespace gell {

// Exact Pfaffian of a skew-symmetric matrix by first-row expansion with
// memoization over index subsets. Pf(empty) = 1; odd dimension gives 0.
// Throws on a symmetry violation (S^T != -S).
Rat pfaffian(const RatMatrix& s);
Rat pfaffian(const IntMatrix& s);

// Pfaffian of the principal submatrix on the rows/columns in subset
// (1-based, taken in increasing order). |subset| must be even.
Rat pfaffian_minor(const RatMatrix& s, SubsetMask subset);

}  // namespace gell

#endif
