#ifndef GELL_TRACE_PAIRING_HPP
#define GELL_TRACE_PAIRING_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gell/ktheory.hpp"
#include "gell/twist.hpp"

namespace gell {

// Value of the canonical trace on a K-class: a + b*theta, with b = 0 and
// symbolic = false in exact mode.
struct TraceValue {
    Rat one = 0;
    Rat theta = 0;
    bool symbolic = false;

    friend bool operator==(const TraceValue&, const TraceValue&) = default;
};

TraceValue operator+(const TraceValue& a, const TraceValue& b);
TraceValue operator*(const TraceValue& a, const Rat& c);
TraceValue operator/(const TraceValue& a, const Rat& c);
std::string to_string(const TraceValue& v);

// tau_mu(K_0): a finitely generated subgroup of Q, or a pair of coefficient
// groups in the d = 2 symbolic mode. The Steinitz completion describes the
// full tower when a periodic tail is present (untwisted labels only).
struct GapLabelGroup {
    bool symbolic = false;
    SubgroupOfQ one_part;
    SubgroupOfQ theta_part;
    std::optional<SupernaturalNumber> completion;

    bool same_group(const GapLabelGroup& other) const {
        return symbolic == other.symbolic && one_part == other.one_part &&
               theta_part == other.theta_part;
    }
};

// Trace through the topological index formula: the top-degree Chern
// coefficient over the (signed) covering index of the class's stage.
// Well-defined on colimit classes.
TraceValue trace_untwisted(const ExteriorClass& x);

// Twisted pairing: sum over even subsets I of Pf(Theta_I) times the top
// coefficient of pullback(e_I) ^ x, over the signed index. Base forms dx_I
// are anchored at stage 0 and pulled back by the composed transposed steps.
TraceValue trace_twisted(const ExteriorClass& x, const Twist& twist);

// Pf(Theta_I) as trace values at the base torus (stage 0).
std::vector<std::pair<SubsetMask, TraceValue>> base_pfaffian_profile(const OdometerSpec& spec,
                                                                     const Twist& twist);

// Pf of the restriction (B_j^T Theta B_j)_I at stage j.
std::vector<std::pair<SubsetMask, TraceValue>> stage_pfaffian_profile(const OdometerSpec& spec,
                                                                      const Twist& twist, int j);

// Group generated by the traces of all basis classes of parity d over
// stages 0..depth (the K-theory route).
GapLabelGroup gap_label_group(SpecPtr spec, const Twist& twist, int depth);

// Independent route: stage by stage, (1/index) times the restricted
// Pfaffian profile values.
GapLabelGroup twisted_label_group_via_restriction(SpecPtr spec, const Twist& twist, int depth);

// The two sides of the gap-labelling equation for an untwisted spec:
// trace group of K_0 vs clopen measure group.
struct GapVerification {
    GapLabelGroup lhs;
    SubgroupOfQ rhs;
    bool equal = false;
};

GapVerification verify_gap_labelling(SpecPtr spec, int depth);

// d = 1 only: invariant factors of the cokernel of (id - cyclic shift) on
// Z^q for q = [Z : Gamma_j]; a 0 entry contributes a Z summand.
std::vector<Int> coinvariants_rank_d1(const OdometerSpec& spec, int j);

// The assembled geometric Elliott invariant at truncation depth.
struct GEllData {
    SpecPtr spec;
    Twist twist;
    int depth = 0;
    bool degenerate = false;

    KGroupPresentation k_even;
    KGroupPresentation k_odd;

    std::vector<std::pair<int, TraceValue>> transfer_table;  // stage -> trace

    struct PairingRow {
        int stage;
        SubsetMask subset;
        TraceValue value;
    };
    std::vector<PairingRow> pairing_table;

    GapLabelGroup labels_untwisted;
    SubgroupOfQ measure_group;
    std::optional<GapLabelGroup> twisted_route_a;
    std::optional<GapLabelGroup> twisted_route_b;
    bool routes_agree = false;
};

GEllData compute_gell(SpecPtr spec, const Twist& twist, int depth);

}  // namespace gell

#endif
