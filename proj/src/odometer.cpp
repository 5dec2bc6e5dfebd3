#include "gell/odometer.hpp"

#include <stdexcept>
#include <string>

namespace gell {

OdometerSpec::OdometerSpec(int rank, std::vector<IntMatrix> steps, std::vector<IntMatrix> tail)
    : rank_(rank), steps_(std::move(steps)), tail_(std::move(tail)) {
    if (rank_ < 1) throw std::invalid_argument("odometer rank must be >= 1");
    auto check = [this](const IntMatrix& m, const char* what) {
        if (m.rows != rank_ || m.cols != rank_)
            throw std::invalid_argument(std::string(what) + " matrix is not rank x rank");
        if (determinant(m) == 0)
            throw std::invalid_argument(std::string(what) + " matrix is singular");
    };
    for (const IntMatrix& m : steps_) check(m, "step");
    for (const IntMatrix& m : tail_) check(m, "periodic tail");
}

void OdometerSpec::require_stage(int j) const {
    if (!stage_valid(j))
        throw std::invalid_argument("stage " + std::to_string(j) +
                                    " beyond finite depth of a tower without periodic tail");
}

bool OdometerSpec::degenerate() const {
    for (const IntMatrix& m : steps_)
        if (abs(determinant(m)) >= 2) return false;
    for (const IntMatrix& m : tail_)
        if (abs(determinant(m)) >= 2) return false;
    return true;
}

const IntMatrix& OdometerSpec::step_at(int j) const {
    if (j < 1) throw std::invalid_argument("step index must be >= 1");
    if (j <= finite_depth()) return steps_[j - 1];
    if (!has_tail()) throw std::invalid_argument("step beyond finite depth without periodic tail");
    return tail_[(j - finite_depth() - 1) % tail_.size()];
}

IntMatrix OdometerSpec::basis_at(int j) const {
    require_stage(j);
    IntMatrix b = IntMatrix::identity(rank_);
    for (int i = 1; i <= j; ++i) b = b * step_at(i);
    return b;
}

Int OdometerSpec::index_at(int j) const {
    require_stage(j);
    Int idx = 1;
    for (int i = 1; i <= j; ++i) idx *= abs(determinant(step_at(i)));
    return idx;
}

Int OdometerSpec::signed_index_at(int j) const {
    require_stage(j);
    Int idx = 1;
    for (int i = 1; i <= j; ++i) idx *= determinant(step_at(i));
    return idx;
}

std::vector<Int> quotient_structure(const OdometerSpec& spec, int j) {
    spec.require_stage(j);
    return invariant_factors(spec.basis_at(j));
}

CylinderSet make_cylinder(const OdometerSpec& spec, int stage, const std::vector<Int>& point) {
    spec.require_stage(stage);
    if (static_cast<int>(point.size()) != spec.rank())
        throw std::invalid_argument("cylinder point has wrong dimension");
    SmithResult s = smith_normal_form(spec.basis_at(stage));
    // Z^d / B Z^d in Smith coordinates: x ~ y iff U x == U y mod diag(D)
    CylinderSet c;
    c.stage = stage;
    c.coords.resize(spec.rank());
    for (int i = 0; i < spec.rank(); ++i) {
        Int v = 0;
        for (int k = 0; k < spec.rank(); ++k) v += s.u.at(i, k) * point[k];
        mpz_fdiv_r(c.coords[i].get_mpz_t(), v.get_mpz_t(), s.d.at(i, i).get_mpz_t());
    }
    return c;
}

std::vector<CylinderSet> cylinders_at(const OdometerSpec& spec, int stage) {
    spec.require_stage(stage);
    std::vector<Int> factors = quotient_structure(spec, stage);
    std::vector<CylinderSet> out;
    std::vector<Int> coords(factors.size(), Int(0));
    for (;;) {
        out.push_back(CylinderSet{stage, coords});
        int i = static_cast<int>(coords.size()) - 1;
        while (i >= 0) {
            ++coords[i];
            if (coords[i] < factors[i]) break;
            coords[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

Rat cylinder_measure(const OdometerSpec& spec, const CylinderSet& c) {
    spec.require_stage(c.stage);
    return make_rat(1, spec.index_at(c.stage));
}

SubgroupOfQ clopen_measure_group(const OdometerSpec& spec, int depth) {
    spec.require_stage(depth);
    std::vector<Rat> gens;
    for (int j = 0; j <= depth; ++j) gens.push_back(make_rat(1, spec.index_at(j)));
    return subgroup_generator(gens);
}

OdometerSpec validate_tower(const std::vector<Sublattice>& bases) {
    if (bases.empty()) throw std::invalid_argument("empty tower");
    const int d = bases.front().rank;
    for (const Sublattice& s : bases) {
        if (s.rank != d) throw std::invalid_argument("tower mixes ranks");
        if (s.basis.rows != d || s.basis.cols != d)
            throw std::invalid_argument("tower basis is not rank x rank");
        if (determinant(s.basis) == 0) throw std::invalid_argument("tower basis is singular");
    }
    std::vector<IntMatrix> steps;
    for (size_t j = 0; j + 1 < bases.size(); ++j) {
        auto x = solve_integral(bases[j].basis, bases[j + 1].basis);
        if (!x)
            throw std::invalid_argument("tower is not nested at stage " + std::to_string(j + 1) +
                                        ": Gamma_" + std::to_string(j + 1) +
                                        " is not contained in Gamma_" + std::to_string(j));
        steps.push_back(*x);
    }
    return OdometerSpec(d, std::move(steps));
}

}  // namespace gell
