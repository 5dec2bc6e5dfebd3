#include "gell/trace_pairing.hpp"

#include <stdexcept>

namespace gell {

TraceValue operator+(const TraceValue& a, const TraceValue& b) {
    return {a.one + b.one, a.theta + b.theta, a.symbolic || b.symbolic};
}

TraceValue operator*(const TraceValue& a, const Rat& c) {
    return {a.one * c, a.theta * c, a.symbolic};
}

TraceValue operator/(const TraceValue& a, const Rat& c) {
    if (c == 0) throw std::invalid_argument("trace value division by zero");
    return {a.one / c, a.theta / c, a.symbolic};
}

std::string to_string(const TraceValue& v) {
    if (!v.symbolic) return to_string(v.one);
    if (v.theta == 0) return to_string(v.one);
    std::string t = to_string(v.theta) + "*theta";
    if (v.one == 0) return t;
    return to_string(v.one) + " + " + t;
}

namespace {

void check_twist_dimension(const OdometerSpec& spec, const Twist& twist) {
    if (twist.mode == Twist::Mode::numeric && twist.form->dimension() != spec.rank())
        throw std::invalid_argument("twist dimension does not match spec rank");
    if (twist.mode == Twist::Mode::symbolic && spec.rank() != kSymbolicDimension)
        throw std::invalid_argument("symbolic twist is defined for rank 2 only");
}

SubsetMask full_mask(int d) { return (SubsetMask{1} << d) - 1; }

}  // namespace

std::vector<std::pair<SubsetMask, TraceValue>> base_pfaffian_profile(const OdometerSpec& spec,
                                                                     const Twist& twist) {
    check_twist_dimension(spec, twist);
    std::vector<std::pair<SubsetMask, TraceValue>> out;
    switch (twist.mode) {
        case Twist::Mode::none:
            out.emplace_back(SubsetMask{0}, TraceValue{1, 0, false});
            break;
        case Twist::Mode::numeric:
            for (const auto& [s, pf] : pfaffian_profile(*twist.form))
                out.emplace_back(s, TraceValue{pf, 0, false});
            break;
        case Twist::Mode::symbolic:
            // Theta = theta*J: Pf over the empty set is 1, over {1,2} it is theta
            out.emplace_back(SubsetMask{0}, TraceValue{1, 0, true});
            out.emplace_back(full_mask(kSymbolicDimension), TraceValue{0, 1, true});
            break;
    }
    return out;
}

std::vector<std::pair<SubsetMask, TraceValue>> stage_pfaffian_profile(const OdometerSpec& spec,
                                                                      const Twist& twist, int j) {
    check_twist_dimension(spec, twist);
    spec.require_stage(j);
    std::vector<std::pair<SubsetMask, TraceValue>> out;
    switch (twist.mode) {
        case Twist::Mode::none:
            out.emplace_back(SubsetMask{0}, TraceValue{1, 0, false});
            break;
        case Twist::Mode::numeric:
            for (const auto& [s, pf] :
                 pfaffian_profile(restricted_form(*twist.form, spec.basis_at(j))))
                out.emplace_back(s, TraceValue{pf, 0, false});
            break;
        case Twist::Mode::symbolic: {
            // B^T (theta J) B = theta det(B) J in rank 2
            out.emplace_back(SubsetMask{0}, TraceValue{1, 0, true});
            out.emplace_back(full_mask(kSymbolicDimension),
                             TraceValue{0, Rat(determinant(spec.basis_at(j))), true});
            break;
        }
    }
    return out;
}

TraceValue trace_untwisted(const ExteriorClass& x) {
    const OdometerSpec& spec = *x.spec();
    Rat value(x.coefficient(full_mask(spec.rank())));
    return TraceValue{value / Rat(spec.signed_index_at(x.stage())), 0, false};
}

TraceValue trace_twisted(const ExteriorClass& x, const Twist& twist) {
    const OdometerSpec& spec = *x.spec();
    if (twist.mode == Twist::Mode::none) return trace_untwisted(x);
    check_twist_dimension(spec, twist);

    const int d = spec.rank();
    const int j = x.stage();
    const SubsetMask full = full_mask(d);
    IntMatrix bt = transpose(spec.basis_at(j));

    TraceValue sum{0, 0, twist.mode == Twist::Mode::symbolic};
    for (const auto& [subset_i, pf] : base_pfaffian_profile(spec, twist)) {
        const int k = subset_size(subset_i);
        // top coefficient of pullback(e_I) ^ x, with Koszul signs
        IntMatrix block = exterior_power(bt, k);
        const int col = lex_rank(d, subset_i);
        Int term = 0;
        std::vector<SubsetMask> targets = lex_subsets(d, k);
        for (size_t r = 0; r < targets.size(); ++r) {
            const Int& minor = block.at(static_cast<int>(r), col);
            if (minor == 0) continue;
            SubsetMask complement = full & ~targets[r];
            Int xc = x.coefficient(complement);
            if (xc == 0) continue;
            term += minor * xc * wedge_sign(targets[r], complement);
        }
        if (term != 0) sum = sum + pf * Rat(term);
    }
    return sum / Rat(spec.signed_index_at(j));
}

GapLabelGroup gap_label_group(SpecPtr spec, const Twist& twist, int depth) {
    check_twist_dimension(*spec, twist);
    spec->require_stage(depth);
    const int d = spec->rank();
    std::vector<Rat> ones, thetas;
    for (int j = 0; j <= depth; ++j) {
        for (SubsetMask s : subsets_of_parity(d, d % 2)) {
            std::map<SubsetMask, Int, SubsetOrder> c;
            c[s] = 1;
            TraceValue v = trace_twisted(ExteriorClass(spec, j, std::move(c)), twist);
            ones.push_back(v.one);
            thetas.push_back(v.theta);
        }
    }
    GapLabelGroup g;
    g.symbolic = twist.mode == Twist::Mode::symbolic;
    g.one_part = subgroup_generator(ones);
    g.theta_part = subgroup_generator(thetas);
    if (!twist.twisted() && spec->has_tail()) {
        std::vector<Int> finite, tail;
        for (int j = 1; j <= depth; ++j) finite.push_back(abs(determinant(spec->step_at(j))));
        for (const IntMatrix& m : spec->tail()) tail.push_back(abs(determinant(m)));
        g.completion = steinitz(finite, tail);
    }
    return g;
}

GapLabelGroup twisted_label_group_via_restriction(SpecPtr spec, const Twist& twist, int depth) {
    check_twist_dimension(*spec, twist);
    spec->require_stage(depth);
    std::vector<Rat> ones, thetas;
    for (int j = 0; j <= depth; ++j) {
        Rat scale = make_rat(1, spec->index_at(j));
        for (const auto& [s, pf] : stage_pfaffian_profile(*spec, twist, j)) {
            TraceValue v = pf * scale;
            ones.push_back(v.one);
            thetas.push_back(v.theta);
        }
    }
    GapLabelGroup g;
    g.symbolic = twist.mode == Twist::Mode::symbolic;
    g.one_part = subgroup_generator(ones);
    g.theta_part = subgroup_generator(thetas);
    return g;
}

GapVerification verify_gap_labelling(SpecPtr spec, int depth) {
    GapVerification v;
    v.lhs = gap_label_group(spec, Twist::untwisted(), depth);
    v.rhs = clopen_measure_group(*spec, depth);
    v.equal = !v.lhs.symbolic && v.lhs.one_part == v.rhs;
    return v;
}

std::vector<Int> coinvariants_rank_d1(const OdometerSpec& spec, int j) {
    if (spec.rank() != 1)
        throw std::invalid_argument("coinvariant presentation implemented for rank 1 only");
    spec.require_stage(j);
    Int qz = spec.index_at(j);
    if (qz > 4096) throw std::invalid_argument("coinvariant quotient too large");
    const int q = static_cast<int>(qz.get_si());
    // id - cyclic shift on Z^q
    IntMatrix m(q, q);
    for (int i = 0; i < q; ++i) {
        m.at(i, i) += 1;
        m.at((i + 1) % q, i) -= 1;
    }
    return invariant_factors(m);
}

GEllData compute_gell(SpecPtr spec, const Twist& twist, int depth) {
    check_twist_dimension(*spec, twist);
    spec->require_stage(depth);
    GEllData g;
    g.spec = spec;
    g.twist = twist;
    g.depth = depth;
    g.degenerate = spec->degenerate();
    g.k_even = kgroup_report(*spec, Parity::even, depth);
    g.k_odd = kgroup_report(*spec, Parity::odd, depth);

    for (int j = 0; j <= depth; ++j) {
        CylinderSet c{j, std::vector<Int>(static_cast<size_t>(spec->rank()), Int(0))};
        g.transfer_table.emplace_back(j, trace_untwisted(transfer_class(spec, c)));
    }

    const int d = spec->rank();
    for (int j = 0; j <= depth; ++j)
        for (SubsetMask s : subsets_of_parity(d, d % 2)) {
            std::map<SubsetMask, Int, SubsetOrder> c;
            c[s] = 1;
            g.pairing_table.push_back(
                {j, s, trace_twisted(ExteriorClass(spec, j, std::move(c)), twist)});
        }

    g.labels_untwisted = gap_label_group(spec, Twist::untwisted(), depth);
    g.measure_group = clopen_measure_group(*spec, depth);
    g.routes_agree = g.labels_untwisted.one_part == g.measure_group;
    if (twist.twisted()) {
        g.twisted_route_a = gap_label_group(spec, twist, depth);
        g.twisted_route_b = twisted_label_group_via_restriction(spec, twist, depth);
        g.routes_agree = g.routes_agree && g.twisted_route_a->same_group(*g.twisted_route_b);
    }
    return g;
}

}  // namespace gell
