#ifndef GELL_EXTERIOR_HPP
#define GELL_EXTERIOR_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gell/matrix.hpp"

namespace gell {

// Subsets of {1..n} are held as bitmasks (bit i-1 <=> element i). All matrix
// bases over subsets use lexicographic order of the sorted element lists,
// fixed globally.
using SubsetMask = std::uint32_t;

long binomial(int n, int k);

SubsetMask mask_of(const std::vector<int>& elements);  // 1-based elements
std::vector<int> elements_of(SubsetMask m);            // ascending, 1-based
int subset_size(SubsetMask m);
std::string subset_to_string(SubsetMask m);  // "{1,3}", "{}"

// k-subsets of {1..n} in lexicographic order.
std::vector<SubsetMask> lex_subsets(int n, int k);

// Degrees k = parity, parity+2, ... <= n, each block in lex order.
std::vector<SubsetMask> subsets_of_parity(int n, int parity);

// Degrees 0..n concatenated, each block in lex order.
std::vector<SubsetMask> subsets_by_degree(int n);

// Compare by (degree, lex order of element lists).
bool subset_order_less(SubsetMask a, SubsetMask b);
struct SubsetOrder {
    bool operator()(SubsetMask a, SubsetMask b) const { return subset_order_less(a, b); }
};

// Position of s within lex_subsets(n, |s|).
int lex_rank(int n, SubsetMask s);

// Koszul sign of e_I ^ e_J for disjoint I, J: parity of #{(i,j) : i in I, j in J, j < i}.
int wedge_sign(SubsetMask i, SubsetMask j);

// k-th exterior power: C(n,k) x C(n,k) matrix of k x k minors,
// entry (S,T) = det A[S,T], bases in lex order. k = 0 gives [1].
IntMatrix exterior_power(const IntMatrix& a, int k);

}  // namespace gell

#endif
