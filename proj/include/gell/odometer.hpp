#ifndef GELL_ODOMETER_HPP
#define GELL_ODOMETER_HPP

#include <memory>
#include <vector>

#include "gell/matrix.hpp"
#include "gell/smith.hpp"
#include "gell/subgroup_q.hpp"

namespace gell {

// A finite-index sublattice of Z^d, spanned by the columns of `basis`.
struct Sublattice {
    int rank = 0;
    IntMatrix basis;  // d x d, det != 0
};

// Tower of nested sublattices Gamma_0 = Z^d >= Gamma_1 >= ... given by step
// matrices, Gamma_j = B_j Z^d with B_j = M_1 * ... * M_j. An optional
// periodic tail of step matrices extends the tower indefinitely.
class OdometerSpec {
public:
    OdometerSpec(int rank, std::vector<IntMatrix> steps, std::vector<IntMatrix> tail = {});

    int rank() const { return rank_; }
    const std::vector<IntMatrix>& steps() const { return steps_; }
    const std::vector<IntMatrix>& tail() const { return tail_; }

    bool has_tail() const { return !tail_.empty(); }
    int finite_depth() const { return static_cast<int>(steps_.size()); }
    bool stage_valid(int j) const { return j >= 0 && (has_tail() || j <= finite_depth()); }
    void require_stage(int j) const;

    // An action on a genuine Cantor set needs a step of index >= 2 somewhere.
    bool degenerate() const;

    const IntMatrix& step_at(int j) const;  // 1-based
    IntMatrix basis_at(int j) const;        // B_j, B_0 = identity
    Int index_at(int j) const;              // [Z^d : Gamma_j]
    Int signed_index_at(int j) const;       // prod det M_i, tracks orientation

    friend bool operator==(const OdometerSpec&, const OdometerSpec&) = default;

private:
    int rank_;
    std::vector<IntMatrix> steps_;
    std::vector<IntMatrix> tail_;
};

using SpecPtr = std::shared_ptr<const OdometerSpec>;

// Invariant factors of Z^d / Gamma_j (Smith form of B_j); product = index.
std::vector<Int> quotient_structure(const OdometerSpec& spec, int j);

// Clopen cylinder at a stage: a coset of Gamma_j, held in canonical Smith
// coordinates (i-th coordinate reduced mod the i-th invariant factor).
struct CylinderSet {
    int stage = 0;
    std::vector<Int> coords;

    friend bool operator==(const CylinderSet&, const CylinderSet&) = default;
};

CylinderSet make_cylinder(const OdometerSpec& spec, int stage, const std::vector<Int>& point);

// All cosets at a stage, in lexicographic coordinate order.
std::vector<CylinderSet> cylinders_at(const OdometerSpec& spec, int stage);

// Haar measure of the cylinder: 1 / [Z^d : Gamma_j].
Rat cylinder_measure(const OdometerSpec& spec, const CylinderSet& c);

// Subgroup of Q generated by the cylinder measures at stages 0..depth.
SubgroupOfQ clopen_measure_group(const OdometerSpec& spec, int depth);

// Builds a spec from explicit bases by solving B_j X = B_{j+1} over Z;
// rejects non-nested towers, naming the first failing stage.
OdometerSpec validate_tower(const std::vector<Sublattice>& bases);

}  // namespace gell

#endif
